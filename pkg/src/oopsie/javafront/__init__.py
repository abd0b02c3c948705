"""Front end for the analyzed Java subset: lexer, parser, API table, CFG."""

from .api import ApiCall, Receiver, Role, classify_call
from .cfg import BasicBlock, Cfg, build_cfg
from .lexer import JavaSyntaxError, SourceSpan
from .parser import SubsetViolation, parse_java
from .render import render_java

__all__ = [
    "ApiCall", "BasicBlock", "Cfg", "JavaSyntaxError", "Receiver", "Role",
    "SourceSpan", "SubsetViolation", "build_cfg", "classify_call",
    "parse_java", "render_java",
]
