"""
Input/output helpers: the on-disk count cache and the text, JSON and CSV emitters used by the command line.

+-------------------------------------+----------------------------------------------------------------------------+
| class / function                    | purpose                                                                    |
+=====================================+============================================================================+
| :class:`.CountCache`                | Append-only JSON Lines cache of exact counts.                              |
+-------------------------------------+----------------------------------------------------------------------------+
| :func:`.cached_count`               | Looks a count up in the cache, computing and storing it when missing.      |
+-------------------------------------+----------------------------------------------------------------------------+
| :func:`.render`                     | Formats rows as an aligned text table, JSON or CSV.                        |
+-------------------------------------+----------------------------------------------------------------------------+

Counts are always written as decimal strings; most of them do not fit in 64 bits.
"""
import csv
import json
import logging
from io import StringIO
from pathlib import Path
from typing import Any, Optional, Union

from polytri.counting import CountRecord, Family, evaluate_family
from polytri.numeric import Count

# Set up the logger for the module
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s %(levelname)s %(name)s [%(lineno)d] %(message)s "
)

# Get the logger
logger: logging.Logger = logging.getLogger("polytri.io")

TOOL_VERSION: str = "0.1.0"

FORMATS: tuple[str, ...] = ("text", "json", "csv")

CacheKey = tuple[str, tuple[int, ...]]


class CacheConflictError(Exception):
    """The cache holds two different counts for the same family and parameters."""


class CountCache:
    """
    An append-only JSON Lines file of :class:`polytri.counting.CountRecord` entries. Every line is
    ``{"family": ..., "params": [...], "count": "<decimal>", "tool_version": ...}``. A key may appear more than once
    only with the same count; anything else is a correctness bug and aborts.

    :ivar pathlib.Path path: The cache file.
    :ivar logging.Logger logger: The logger for this class.

    .. automethod:: __init__
    """
    def __init__(self, path: Union[str, Path]) -> None:
        """
        Loads the existing entries, if the file exists.

        :raises CacheConflictError: If the file already contains conflicting entries.
        :raises ValueError: If a line is not a valid entry.
        :param Union[str, pathlib.Path] path: Location of the cache file.
        """
        self.logger: logging.Logger = logging.getLogger("polytri.io.CountCache")
        self.path: Path = Path(path)
        self._entries: dict[CacheKey, Count] = {}

        if not self.path.exists():
            return

        with open(self.path, "r", encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    entry: dict[str, Any] = json.loads(line)
                    key: CacheKey = (str(entry["family"]), tuple(int(v) for v in entry["params"]))
                    count: Count = int(entry["count"])
                except (json.JSONDecodeError, KeyError, TypeError, ValueError) as err:
                    self.logger.critical(f"__init__ - Malformed Line {number}: {err}")
                    raise ValueError("Malformed Cache Line " + str(number))
                self._remember(key, count)

        self.logger.debug(f"__init__ - loaded {len(self._entries)} entries from {self.path}")

    def __len__(self) -> int:
        return len(self._entries)

    def _remember(self, key: CacheKey, count: Count) -> bool:
        """Records a value; returns whether the key was new."""
        known: Optional[Count] = self._entries.get(key)
        if known is None:
            self._entries[key] = count
            return True
        if known != count:
            self.logger.critical(f"_remember - Conflict For {key}: {known} != {count}")
            raise CacheConflictError(f"Conflicting counts for {key[0]} {list(key[1])}")
        return False

    def get(self, family: Family, params: tuple[int, ...]) -> Optional[Count]:
        """The cached count, or None."""
        return self._entries.get((family.value, tuple(params)))

    def put(self, record: CountRecord) -> None:
        """
        Appends a record unless the same record is already present.

        :raises CacheConflictError: If a different count is cached under the same key.
        """
        key: CacheKey = (record.family.value, tuple(record.params))
        if not self._remember(key, record.count):
            return

        line: str = json.dumps({
            "family": record.family.value,
            "params": list(record.params),
            "count": str(record.count),
            "tool_version": TOOL_VERSION,
        })
        with open(self.path, "a", encoding="utf-8") as handle:
            handle.write(line + "\n")

    def records(self) -> list[CountRecord]:
        """All cached records, sorted by family and parameters."""
        return [CountRecord(Family(f), p, c) for (f, p), c in sorted(self._entries.items())]


def cached_count(
        cache: Optional[CountCache], family: Family, params: tuple[int, ...], recheck: bool = False
) -> CountRecord:
    """
    The count for a family, taken from the cache when present. Fresh values are evaluated and stored. With
    ``recheck`` a cached value is evaluated again and must agree.

    >>> from polytri.counting import Family
    >>> from polytri.io import cached_count
    >>> cached_count(None, Family.BALANCED, (3, 3)).count
    29

    :raises CacheConflictError: If a rechecked value differs from the cached one.
    """
    if cache is not None:
        known: Optional[Count] = cache.get(family, params)
        if known is not None and not recheck:
            return CountRecord(family, tuple(params), known)

    record: CountRecord = CountRecord(family, tuple(params), evaluate_family(family, tuple(params)))
    if cache is not None:
        cache.put(record)
    return record


def _cell(value: Any) -> str:
    """Decimal strings for integers, six decimals for floats."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return str(value)


def render(rows: list[dict[str, Any]], fmt: str, columns: Optional[list[str]] = None) -> str:
    """
    Formats a list of rows.

    >>> from polytri.io import render
    >>> print(render([{"k": 3, "r": 3, "count": 29}], "csv"))
    k,r,count
    3,3,29

    :raises ValueError: If the format is not one of text, json or csv.
    :param list[dict[str, Any]] rows: Rows in output order.
    :param str fmt: One of :data:`FORMATS`.
    :param Optional[list[str]] columns: Column order; defaults to the keys of the first row.
    :rtype: str
    :return: The formatted output without a trailing newline.
    """
    if fmt not in FORMATS:
        logger.critical("render - Unknown Format " + str(fmt))
        raise ValueError("Unknown Format " + str(fmt))

    names: list[str] = columns if columns is not None else (list(rows[0]) if rows else [])

    if fmt == "json":
        return json.dumps([{name: _json_value(row.get(name)) for name in names} for row in rows], indent=2)

    if fmt == "csv":
        buffer: StringIO = StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(names)
        for row in rows:
            writer.writerow([_cell(row.get(name, "")) for name in names])
        return buffer.getvalue().rstrip("\n")

    cells: list[list[str]] = [names] + [[_cell(row.get(name, "")) for name in names] for row in rows]
    widths: list[int] = [max(len(line[i]) for line in cells) for i in range(len(names))]
    return "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(line, widths)).rstrip() for line in cells
    )
