"""Recommended and supported JDBC getter/setter conversions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from typing import Mapping, Optional

from .schema import SqlKind, SqlScalarType, parse_kind

JAVA_ACCESSORS = (
    "int", "long", "short", "String", "boolean", "Date", "Time",
    "Timestamp", "BigDecimal", "double", "float",
)

DIRECTIONS = ("getter", "setter")
LEVELS = ("recommended", "supported")


class Conversion(enum.Enum):
    RECOMMENDED = "recommended"
    SUPPORTED_ONLY = "supported"
    DISALLOWED = "disallowed"


class MappingError(Exception):
    pass


class ConfigSyntaxError(MappingError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownJavaAccessor(MappingError):
    def __init__(self, name: str, line: int = 0):
        super().__init__(f"line {line}: unknown Java accessor type {name!r}")
        self.name = name


class UnknownSqlKind(MappingError):
    def __init__(self, name: str, line: int = 0):
        super().__init__(f"line {line}: unknown SQL kind {name!r}")
        self.name = name


Key = tuple[str, str, SqlKind]  # (direction, level, kind)


@dataclass(frozen=True)
class ConversionTable:
    entries: Mapping[Key, frozenset[str]]

    def lookup(self, direction: str, level: str, kind: SqlKind) -> frozenset[str]:
        return self.entries.get((direction, level, kind), frozenset())

    def recommended(self, direction: str, sql: SqlScalarType | SqlKind) -> frozenset[str]:
        return self.lookup(_direction(direction), "recommended", _kind(sql))

    def supported(self, direction: str, sql: SqlScalarType | SqlKind) -> frozenset[str]:
        return self.lookup(_direction(direction), "supported", _kind(sql))

    def __hash__(self):
        return hash(tuple(sorted((k[0], k[1], k[2].value) for k in self.entries)))


def _kind(sql) -> SqlKind:
    return sql if isinstance(sql, SqlKind) else sql.kind


def _direction(d: str) -> str:
    d = d.lower()
    if d in ("get", "getter"):
        return "getter"
    if d in ("set", "setter"):
        return "setter"
    raise ValueError(f"unknown direction {d!r}")


def parse_config(text: str) -> dict[Key, frozenset[str]]:
    entries: dict[Key, frozenset[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigSyntaxError(lineno, f"expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        parts = key.split(".")
        if len(parts) != 3 or parts[0] not in DIRECTIONS or parts[1] not in LEVELS:
            raise ConfigSyntaxError(lineno, f"bad key {key!r} (want direction.level.SQLKIND)")
        kind = parse_kind(parts[2])
        if kind is None:
            raise UnknownSqlKind(parts[2], lineno)
        accessors = [a.strip() for a in value.split(",") if a.strip()]
        for a in accessors:
            if a not in JAVA_ACCESSORS:
                raise UnknownJavaAccessor(a, lineno)
        entries[(parts[0], parts[1], kind)] = frozenset(accessors)
    return entries


def default_config_text() -> str:
    return resources.files("oopsie").joinpath("data/jdbc_conversions.txt").read_text()


def load_conversion_table(config: Optional[str] = None) -> ConversionTable:
    """Built-in table, optionally overridden by ``config`` entries.

    Overrides replace one (direction, level, kind) set.  Anything made
    recommended is dropped from the supported set of the same key so the two
    stay disjoint.
    """
    entries = parse_config(default_config_text())
    if config:
        entries.update(parse_config(config))
    for direction in DIRECTIONS:
        for kind in SqlKind:
            rec = entries.setdefault((direction, "recommended", kind), frozenset())
            sup = entries.get((direction, "supported", kind), frozenset())
            entries[(direction, "supported", kind)] = sup - rec
    return ConversionTable(entries)


def classify_conversion(table: ConversionTable, direction: str, sql, java: str) -> Conversion:
    direction = _direction(direction)
    if java in table.recommended(direction, sql):
        return Conversion.RECOMMENDED
    if java in table.supported(direction, sql):
        return Conversion.SUPPORTED_ONLY
    return Conversion.DISALLOWED


def accessor_method(direction: str, java: str) -> str:
    """``("getter", "int") -> "getInt"``."""
    prefix = "get" if _direction(direction) == "getter" else "set"
    return prefix + java[0].upper() + java[1:]
