from .error_handler import run_command

__all__ = ["run_command"]
