# -*- coding: utf-8 -*-
"""Exception hierarchy shared by the algebra, verification and CLI layers."""

from __future__ import annotations

from typing import Any, Optional


class OctowittError(Exception):
    """Base class for all errors raised by octowitt."""


class DimensionMismatchError(OctowittError, ValueError):
    """Operands live in algebras of different size (generators, blocks or variables)."""


class IndexRangeError(OctowittError, ValueError):
    """An index or block number is outside its admissible range."""


class CodecError(OctowittError, ValueError):
    """JSON input could not be decoded into an algebra value."""


class IdentityDefect(OctowittError, AssertionError):
    """Two evaluations of an identity that must agree did not."""

    def __init__(
        self,
        check: str,
        expected: Optional[Any] = None,
        actual: Optional[Any] = None,
    ) -> None:
        self.check = check
        self.expected = expected
        self.actual = actual
        super().__init__(f"{check}: expected {expected!r}, got {actual!r}")
