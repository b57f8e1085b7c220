from .frames import FrameRecorder, render_ascii, render_frame, render_ppm

__all__ = ["FrameRecorder", "render_ascii", "render_frame", "render_ppm"]
