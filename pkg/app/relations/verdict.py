# -*- coding: utf-8 -*-
"""
三值判定
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class Answer(str, Enum):
    RELATED = "related"
    UNRELATED = "unrelated"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


class Certainty(str, Enum):
    FINAL = "final"
    PROVISIONAL = "provisional"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    """某一阶段的观测结果；final 的结论在更高阶段不会改变"""
    answer: Answer
    stage: int
    certainty: Certainty
    detail: str = ""
    missing: Tuple[int, ...] = ()

    @property
    def is_final(self) -> bool:
        return self.certainty is Certainty.FINAL

    @property
    def related(self) -> bool:
        return self.answer is Answer.RELATED

    @property
    def unrelated(self) -> bool:
        return self.answer is Answer.UNRELATED

    def to_dict(self) -> dict:
        data = {"answer": str(self.answer), "stage": self.stage, "certainty": str(self.certainty)}
        if self.detail:
            data["detail"] = self.detail
        if self.missing:
            data["missing"] = list(self.missing)
        return data


def _certainty(final: bool) -> Certainty:
    return Certainty.FINAL if final else Certainty.PROVISIONAL


def related(stage: int, final: bool, detail: str = "") -> Verdict:
    return Verdict(Answer.RELATED, stage, _certainty(final), detail)


def unrelated(stage: int, final: bool, detail: str = "") -> Verdict:
    return Verdict(Answer.UNRELATED, stage, _certainty(final), detail)


def unknown(stage: int, detail: str = "", missing: Tuple[int, ...] = ()) -> Verdict:
    return Verdict(Answer.UNKNOWN, stage, Certainty.PROVISIONAL, detail, tuple(missing))


def _details(*verdicts: Verdict) -> str:
    return "; ".join(sorted({v.detail for v in verdicts if v.detail}))


def conjoin(first: Verdict, second: Verdict, stage: int) -> Verdict:
    """两个条件同时成立；结果与参数次序无关"""
    refuted = [v for v in (first, second) if v.unrelated and v.is_final]
    if refuted:
        return unrelated(stage, True, _details(*refuted))
    if first.related and second.related:
        return related(stage, first.is_final and second.is_final)
    negative = [v for v in (first, second) if v.unrelated]
    if negative:
        return unrelated(stage, False, _details(*negative))
    missing = tuple(sorted(set(first.missing) | set(second.missing)))
    return unknown(stage, _details(first, second), missing)
