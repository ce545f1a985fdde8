# -*- coding: utf-8 -*-
"""Pydantic models for verification reports and decomposition output."""

from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class CheckFailure(BaseModel):
    check: str = Field(..., min_length=1, description="Stable check id, e.g. 'octonion.alternative'")
    inputs: Dict[str, Any] = Field(default_factory=dict)
    expected: Optional[Any] = None
    actual: Optional[Any] = None


class SuiteResult(BaseModel):
    name: str
    checks_run: int = Field(0, ge=0)
    failures: List[CheckFailure] = []
    wall_time: Optional[float] = Field(None, ge=0, description="Seconds; omitted with --no-timings")

    @property
    def passed(self) -> bool:
        return not self.failures


class VerificationConfig(BaseModel):
    n_max: int = Field(..., ge=1)
    samples: int = Field(..., ge=0)
    seed: int
    sample_bound: int = Field(100, ge=1)


class VerificationReport(BaseModel):
    config: VerificationConfig
    suites: List[SuiteResult] = []
    passed: bool = True
    observations: Dict[str, Any] = Field(
        default_factory=dict, description="Reported facts that are not asserted"
    )


class DecompositionBlock(BaseModel):
    block: int = Field(..., ge=0)
    twistor: List[List[str]] = Field(..., description="X_0..X_7, block-local coordinates")
    hermitian: List[Dict[str, Any]] = Field(..., description="Z_0..Z_7 as tensor JSON")


class DecompositionResult(BaseModel):
    n: int = Field(..., ge=1)
    multi: bool = False
    blocks: List[DecompositionBlock] = []
    reconstruction: Dict[str, Any]
    reconstruction_exact: bool
