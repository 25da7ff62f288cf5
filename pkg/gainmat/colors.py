"""
ANSI colour helpers for the summary printed on standard error
"""

import os
import re
import shutil
import sys


class Colors:
    """ANSI codes used by the summary: rules, keys, PASS/FAIL and warnings"""
    RESET = '\033[0m'

    YELLOW = '\033[33m'
    CYAN = '\033[36m'

    BRIGHT_BLACK = '\033[90m'
    BRIGHT_RED = '\033[91m'
    BRIGHT_GREEN = '\033[92m'

    BOLD = '\033[1m'

    TITLE = CYAN + BOLD
    KEY = BRIGHT_BLACK
    PASS = BRIGHT_GREEN + BOLD
    FAIL = BRIGHT_RED + BOLD
    WARNING = YELLOW


def _enable_windows_ansi(stream) -> bool:
    """Switch a Windows console into virtual terminal mode"""
    try:
        import ctypes
        kernel32 = ctypes.windll.kernel32
        handle = kernel32.GetStdHandle(-12 if stream is sys.stderr else -11)
        mode = ctypes.c_ulong()
        if handle in (0, -1) or not kernel32.GetConsoleMode(handle, ctypes.byref(mode)):
            return False
        return bool(kernel32.SetConsoleMode(handle, mode.value | 0x0004))
    except Exception:
        return False


def supports_color(stream=None, force_color=False):
    """
    Check whether a stream should get colour

    Args:
        stream: Output stream (default: sys.stdout)
        force_color: Colour even when the stream is not a terminal

    Returns:
        True if colour was forced, or the stream is a terminal and
        neither NO_COLOR nor TERM=dumb is set
    """
    if force_color:
        return True
    stream = stream if stream is not None else sys.stdout
    isatty = getattr(stream, 'isatty', None)
    if isatty is None or not isatty():
        return False
    if 'NO_COLOR' in os.environ or os.environ.get('TERM') == 'dumb':
        return False
    if sys.platform == 'win32':
        return _enable_windows_ansi(stream)
    return True


def colorize(text, color_code, stream=None, force_color=False):
    if not supports_color(stream, force_color=force_color):
        return text
    return f'{color_code}{text}{Colors.RESET}'


def get_terminal_width(default=80):
    """Columns of the attached terminal, or `default`"""
    try:
        return shutil.get_terminal_size((default, 24)).columns
    except (OSError, ValueError):
        return default


_ANSI_PATTERN = re.compile(r'\033\[[0-9;]*[a-zA-Z]')


def strip_ansi(text):
    """Remove ANSI colour sequences, leaving the plain text"""
    if not isinstance(text, str):
        return text
    return _ANSI_PATTERN.sub('', text)
