from src.shared.infrastructure.files.atomic import atomic_open, write_frame_csv, write_text

__all__ = ["atomic_open", "write_frame_csv", "write_text"]
