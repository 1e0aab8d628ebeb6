"""Request/response schemas for the session API."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class ImplicationModel(BaseModel):
    premise: list[str] = Field(default_factory=list)
    conclusion: list[str] = Field(default_factory=list)


class DescriptionModel(BaseModel):
    positive: list[str] = Field(default_factory=list)
    negative: list[str] = Field(default_factory=list)


class SessionCreate(BaseModel):
    attributes: list[str]
    mode: Literal["classical", "general"] = "general"
    strategy: Literal["minimal", "max-conclusion"] = "minimal"
    background: list[ImplicationModel] = Field(default_factory=list)
    examples_cxt: Optional[str] = None
    examples: Optional[list[DescriptionModel]] = None
    label: str = ""
    max_interactions: Optional[int] = None

    @model_validator(mode="after")
    def _one_example_source(self) -> "SessionCreate":
        if self.examples_cxt is not None and self.examples is not None:
            raise ValueError("provide examples_cxt or examples, not both")
        if self.mode == "classical" and self.examples is not None:
            raise ValueError("classical sessions take prior examples as a context file")
        return self


class AnswerModel(BaseModel):
    confirm: bool = False
    positive: Optional[list[str]] = None
    negative: Optional[list[str]] = None
    seq: Optional[int] = None

    @model_validator(mode="after")
    def _confirm_or_counterexample(self) -> "AnswerModel":
        has_parts = self.positive is not None or self.negative is not None
        if self.confirm and has_parts:
            raise ValueError("a confirmation carries no counterexample attributes")
        if not self.confirm and not has_parts:
            raise ValueError("either confirm or give a counterexample")
        return self


class ProgressModel(BaseModel):
    confirmed: int
    counterexamples: int
    questions_asked: int


class QuestionModel(BaseModel):
    premise: list[str]
    conclusion: list[str]
    seq: int
    progress: ProgressModel


class SessionSummaryModel(BaseModel):
    id: str
    label: str
    mode: str
    strategy: str
    status: str
    attributes: list[str]
    progress: ProgressModel


class SessionStateModel(SessionSummaryModel):
    question: Optional[QuestionModel] = None
    confirmed: list[ImplicationModel]
    counterexamples: list[DescriptionModel]


class FinishedSummaryModel(BaseModel):
    finished: bool = True
    confirmed: list[ImplicationModel]
    counterexamples: list[DescriptionModel]
    questions_asked: int
