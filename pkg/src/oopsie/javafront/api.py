"""Fixed table of the modeled JDBC methods."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional


class Role(enum.Enum):
    CREATES_SQL_STATEMENT = "CreatesSqlStatement"
    RETRIEVES_SQL_RESULT_SET = "RetrievesSqlResultSet"
    CREATES_AND_RETRIEVES = "CreatesSqlStatement+RetrievesSqlResultSet"
    EXECUTES_WITH_SQL = "ExecutesWithSql"
    NEW_STATEMENT = "NewStatement"
    SETTER = "Setter"
    GETTER = "Getter"
    CURSOR_NEXT = "CursorNext"
    OTHER = "Other"


class Receiver(enum.Enum):
    CONNECTION = "Connection"
    STATEMENT = "Statement"
    PREPARED_STATEMENT = "PreparedStatement"
    RESULT_SET = "ResultSet"
    OTHER = "Other"


@dataclass(frozen=True)
class ApiCall:
    role: Role
    receiver: Receiver
    sql_arg_index: Optional[int] = None
    java_type: Optional[str] = None
    method: str = ""

    @property
    def creates(self) -> bool:
        return self.role in (Role.CREATES_SQL_STATEMENT, Role.CREATES_AND_RETRIEVES)

    @property
    def retrieves(self) -> bool:
        return self.role in (Role.RETRIEVES_SQL_RESULT_SET, Role.CREATES_AND_RETRIEVES)


ACCESSOR_TYPES = {
    "Int": "int", "Long": "long", "Short": "short", "String": "String",
    "Boolean": "boolean", "Date": "Date", "Time": "Time",
    "Timestamp": "Timestamp", "BigDecimal": "BigDecimal", "Double": "double",
    "Float": "float",
}

SQL_TYPES = {r.value for r in Receiver if r is not Receiver.OTHER and r is not Receiver.CONNECTION}
JDBC_TYPES = {r.value for r in Receiver if r is not Receiver.OTHER}


def receiver_of(type_name: Optional[str]) -> Receiver:
    if type_name is None:
        return Receiver.OTHER
    short = type_name.rsplit(".", 1)[-1]
    try:
        return Receiver(short)
    except ValueError:
        return Receiver.OTHER


def classify_call(recv_type, method_name: str) -> ApiCall:
    """Role of ``recv.method_name(...)`` given the receiver's declared type."""
    recv = recv_type if isinstance(recv_type, Receiver) else receiver_of(recv_type)
    m = method_name

    def mk(role, **kw):
        return ApiCall(role, recv, method=m, **kw)

    if recv is Receiver.CONNECTION:
        if m == "prepareStatement":
            return mk(Role.CREATES_SQL_STATEMENT, sql_arg_index=0)
        if m == "createStatement":
            return mk(Role.NEW_STATEMENT)
    elif recv is Receiver.STATEMENT:
        if m == "executeQuery":
            return mk(Role.CREATES_AND_RETRIEVES, sql_arg_index=0)
        if m in ("executeUpdate", "execute", "executeLargeUpdate"):
            return mk(Role.EXECUTES_WITH_SQL, sql_arg_index=0)
        if m == "getResultSet":
            return mk(Role.RETRIEVES_SQL_RESULT_SET)
    elif recv is Receiver.PREPARED_STATEMENT:
        if m in ("executeQuery", "getResultSet"):
            return mk(Role.RETRIEVES_SQL_RESULT_SET)
        if m.startswith("set") and m[3:] in ACCESSOR_TYPES:
            return mk(Role.SETTER, java_type=ACCESSOR_TYPES[m[3:]])
    elif recv is Receiver.RESULT_SET:
        if m == "next":
            return mk(Role.CURSOR_NEXT)
        if m.startswith("get") and m[3:] in ACCESSOR_TYPES:
            return mk(Role.GETTER, java_type=ACCESSOR_TYPES[m[3:]])
    return mk(Role.OTHER)


def result_type(call: ApiCall) -> Optional[str]:
    """Declared Java type of the call's result, when the table knows it."""
    if call.role is Role.CREATES_SQL_STATEMENT:
        return "PreparedStatement"
    if call.role is Role.NEW_STATEMENT:
        return "Statement"
    if call.retrieves:
        return "ResultSet"
    if call.role is Role.GETTER:
        return call.java_type
    if call.role is Role.CURSOR_NEXT:
        return "boolean"
    if call.role is Role.EXECUTES_WITH_SQL:
        return "boolean" if call.method == "execute" else ("long" if call.method == "executeLargeUpdate" else "int")
    if call.receiver is Receiver.PREPARED_STATEMENT and call.method == "executeUpdate":
        return "int"
    if call.receiver is Receiver.PREPARED_STATEMENT and call.method == "execute":
        return "boolean"
    if call.role is Role.SETTER:
        return "void"
    return None
