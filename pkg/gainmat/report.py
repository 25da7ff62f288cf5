"""
Command output: JSON lines on standard output, a human summary on
standard error
"""

import json
import sys
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List, Optional

from pygments import highlight
from pygments.formatters import Terminal256Formatter
from pygments.lexers import JsonLexer
from sympy import Poly

from .colors import Colors, colorize, get_terminal_width, supports_color
from .gains import E_INF


INF_TOKEN = 'inf'


def utf8_stream(stream):
    """Ensure output stream can handle UTF-8 characters"""
    if hasattr(stream, 'reconfigure'):
        try:
            stream.reconfigure(encoding='utf-8', errors='replace')
        except Exception:
            pass
    return stream


def element(e: int):
    """An edge id, or the token for the extra point"""
    return INF_TOKEN if e == E_INF else e


def edge_list(s: Iterable[int]) -> List:
    """Sorted edge ids with the extra point last"""
    s = set(s)
    ordered: List = sorted(e for e in s if e != E_INF)
    if E_INF in s:
        ordered.append(INF_TOKEN)
    return ordered


def polynomial_coefficients(p: Poly) -> List[int]:
    """Coefficients from the top degree down; [] for the zero polynomial"""
    if p.is_zero:
        return []
    return [int(c) for c in p.all_coeffs()]


def jsonable(value: Any) -> Any:
    """Turn report values into plain JSON types"""
    if isinstance(value, (frozenset, set)):
        return edge_list(value)
    if isinstance(value, Poly):
        return str(value.as_expr())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


class ReportWriter:
    """
    Writes result records and a closing summary

    Example usage:
        report = ReportWriter(pretty=True)
        report.record({'command': 'rank', 'rank': 3})
        report.title('rank')
        report.field('rank', 3)
    """

    def __init__(self, output=None, summary=None, pretty=False, force_color=False, style='monokai'):
        """
        Args:
            output: Stream for JSON lines (default: sys.stdout)
            summary: Stream for the human summary (default: sys.stderr)
            pretty: Highlight JSON lines when the output is a colour terminal
            force_color: Colour even when the streams are not terminals
            style: Pygments style for highlighted lines
        """
        self.output = output or utf8_stream(sys.stdout)
        self.summary = summary or utf8_stream(sys.stderr)
        self.pretty = pretty
        self.force_color = force_color
        self.style = style
        self.count = 0

    def line(self, record: dict) -> str:
        """The canonical JSON text of a record, without a newline"""
        return json.dumps(jsonable(record), sort_keys=True, separators=(',', ':'))

    def record(self, record: dict):
        text = self.line(record)
        if self.pretty and supports_color(self.output, force_color=self.force_color):
            text = highlight(text, JsonLexer(), Terminal256Formatter(style=self.style)).rstrip('\n')
        self.output.write(text + '\n')
        self.output.flush()
        self.count += 1

    def _say(self, text: str):
        self.summary.write(text + '\n')
        self.summary.flush()

    def _paint(self, text: str, code: str) -> str:
        return colorize(text, code, stream=self.summary, force_color=self.force_color)

    def title(self, text: str):
        width = min(get_terminal_width(), 72)
        rule = '─' * max(width - len(text) - 4, 4)
        self._say(self._paint(f'── {text} {rule}', Colors.TITLE))

    def field(self, key: str, value: Any):
        self._say(f'  {self._paint(key + ":", Colors.KEY)} {value}')

    def status(self, passed: bool, detail: Optional[str] = None):
        label = self._paint('PASS', Colors.PASS) if passed \
            else self._paint('FAIL', Colors.FAIL)
        self._say(f'  {label}' + (f' {detail}' if detail else ''))

    def warning(self, text: str):
        self._say(self._paint(f'Warning: {text}', Colors.WARNING))
