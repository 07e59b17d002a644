"""Report schemas written by the command line: invariants, covers, verification and ingestion."""

from pydantic import BaseModel, ConfigDict, Field

from app.models.cover_model import CoverSource


class CamelModel(BaseModel):
    """Base schema that serializes with the camelCase keys of the report formats."""

    model_config = ConfigDict(populate_by_name=True)


class InvariantsReport(CamelModel):
    """Invariants of one diagram.

    Args:
        writhe (int): Sum of all chord signs.
        odd_writhe (int | None): Odd writhe, knots only.
        normal (bool): Whether the diagram is checkerboard colourable.
        lk_n (int | None): Linking number of the cover, knots with a cut system only.
        amphicheiral_obstructed (bool | None): True when lk_N is nonzero, so the knot is neither
            equivalent to its switch nor to its mirror image; knots only.
        f (list[list[int]]): f-polynomial as ``[[exp, coeff], ...]``.

    """

    writhe: int
    odd_writhe: int | None = Field(default=None, serialization_alias="oddWrithe")
    normal: bool
    lk_n: int | None = Field(default=None, serialization_alias="lkN")
    amphicheiral_obstructed: bool | None = Field(default=None, serialization_alias="amphicheiralObstructed")
    f: list[list[int]]


class CoverChordEntry(BaseModel):
    """Provenance of one cover chord."""

    id: int
    source: CoverSource
    orig: int


class CoverReport(CamelModel):
    """Components, linking number and chord provenance of a cover."""

    components: int
    lk_n: str | int | None = Field(default=None, serialization_alias="lkN")
    chords: list[CoverChordEntry]


class VerificationFailure(BaseModel):
    """Everything needed to reproduce one failing trial."""

    trial: int
    seed: int
    codes: list[str]
    cuts: list[list[list[int]]] = Field(default_factory=list)
    detail: str


class VerificationReport(BaseModel):
    """Outcome of a verification suite.

    Args:
        suite (str): Suite name.
        seed (int): Base seed.
        trials (int): Number of trials run.
        failures (list[VerificationFailure]): Failing trials, in trial order.
        skipped (int): Trials whose check could not run within the configured limits.
        passed (bool): True iff there are no failures.
        elapsed (float | None): Wall time in seconds, only with ``--timing``.

    """

    suite: str
    seed: int
    trials: int
    max_chords: int = Field(serialization_alias="maxChords")
    failures: list[VerificationFailure] = Field(default_factory=list)
    skipped: int = 0
    passed: bool
    elapsed: float | None = None

    model_config = ConfigDict(populate_by_name=True)


class IngestRow(BaseModel):
    """One CSV row of a table ingestion."""

    name: str
    odd_writhe: int | str = Field(serialization_alias="oddWrithe")
    lk_n: int | str = Field(serialization_alias="lkN")
    f: str
    normal: bool | str

    model_config = ConfigDict(populate_by_name=True)
