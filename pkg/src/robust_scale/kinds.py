from __future__ import annotations

from enum import Enum


class _ParseableEnum(str, Enum):
    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        for member in cls:
            if text in (member.value, member.name.lower()):
                return member
        choices = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown {cls.__name__} {value!r}; expected one of {choices}")

    def __str__(self) -> str:
        return self.value


class EstimatorKind(_ParseableEnum):
    MAD = "mad"
    SN = "sn"
    QN = "qn"
    SD = "sd"


class CorrectionModel(_ParseableEnum):
    REFINED = "refined"
    CROUX1992 = "croux1992"
    ROBUSTBASE = "robustbase"
    ASYMPTOTIC = "asymptotic"
