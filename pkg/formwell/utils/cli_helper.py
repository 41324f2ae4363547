from typing import Iterable, Optional, Sequence, TextIO

from tabulate import tabulate
from termcolor import colored


def supports_color(stream: TextIO) -> bool:
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


def verdict(ok: bool, stream: TextIO, labels: Sequence[str] = ("PASS", "FAIL")) -> str:
    """
    PASS/FAIL text for `ok`, coloured when `stream` is a terminal.

    Parameters:
    - ok: The outcome.
    - stream: Where the text will be written.
    - labels: Texts used for success and failure.
    """
    text = labels[0] if ok else labels[1]
    if not supports_color(stream):
        return text
    return colored(text, "green" if ok else "red")


def write_table(rows: Iterable[Sequence[object]], stream: TextIO, headers: Optional[Sequence[str]] = None) -> None:
    """Write aligned rows without borders."""
    if headers:
        stream.write(tabulate(list(rows), headers=list(headers), tablefmt="plain", disable_numparse=True))
    else:
        stream.write(tabulate(list(rows), tablefmt="plain", disable_numparse=True))
    stream.write("\n")
