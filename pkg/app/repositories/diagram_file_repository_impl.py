"""File implementation of the diagram repository.

Formats are detected from the content: a JSON document starts with ``{``, PD code
consists of ``X±(...)`` and ``V(...)`` records, anything else is a signed Gauss code.
"""

import json
import re
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from app.exceptions.repository_exception import DiagramFileNotFoundError, DiagramFormatError
from app.models.cut_system_model import CutSystem
from app.models.diagram_input_model import DiagramInput, InputFormat, TableEntry
from app.models.gauss_diagram_model import Gap
from app.models.move_model import MoveTrace
from app.repositories.diagram_repository_interface import DiagramRepositoryInterface
from app.schemas.diagram_schema import DiagramDocument
from app.schemas.move_schema import MoveTraceSchema
from app.services.gauss_code_service import parse_gauss_code
from app.services.pd_code_service import parse_pd_code, pd_to_gauss
from app.utils.logger_util import get_logger

logger = get_logger("repository")

_PD_RECORD = re.compile(r"^\s*(X[+-]|V)\s*\(")
_GAUSS_TOKEN = re.compile(r"^([OU]\d+[+-]|\(|\|)")


class DiagramFileRepository(DiagramRepositoryInterface):
    """Read diagrams and related documents from the local file system."""

    def __init__(self, encoding: str = "utf-8") -> None:
        """Initialize the repository.

        Args:
            encoding (str): Text encoding of every file read.

        """
        self.encoding = encoding

    def _read(self, path: Path) -> str:
        """Read a whole file.

        Raises:
            DiagramFileNotFoundError: If the file cannot be read.
            DiagramFormatError: If the bytes are not valid text in the repository encoding.

        """
        try:
            return path.read_text(encoding=self.encoding)
        except UnicodeDecodeError as e:
            raise DiagramFormatError(path, f"not {self.encoding} text (byte {e.start})") from e
        except OSError as e:
            raise DiagramFileNotFoundError(path) from e

    def _read_json(self, path: Path) -> Any:  # noqa: ANN401
        try:
            return json.loads(self._read(path))
        except json.JSONDecodeError as e:
            raise DiagramFormatError(path, f"invalid JSON ({e.msg} at line {e.lineno})") from e

    @staticmethod
    def detect_format(text: str) -> InputFormat:
        """Guess the format of a diagram text."""
        stripped = text.strip()
        if stripped.startswith("{"):
            return InputFormat.JSON
        lines = [line.split("#", 1)[0] for line in stripped.splitlines()]
        if any(_PD_RECORD.match(line) for line in lines):
            return InputFormat.PD
        return InputFormat.GAUSS

    def load_diagram(self, path: Path) -> DiagramInput:
        """Load a diagram file in any supported format.

        Args:
            path (Path): File to read.

        Returns:
            DiagramInput: The diagram, plus the PD code or stored cut system when present.

        Raises:
            DiagramFileNotFoundError: If the file cannot be read.
            DiagramFormatError: If a JSON document does not match the diagram schema.
            GaussCodeSyntaxError: If a Gauss code is malformed.
            PDCodeSyntaxError: If a PD code is malformed.

        """
        text = self._read(path)
        source_format = self.detect_format(text)
        logger.debug("loading %s as %s", path, source_format.value)
        match source_format:
            case InputFormat.JSON:
                try:
                    document = DiagramDocument.model_validate_json(text)
                except ValidationError as e:
                    raise DiagramFormatError(path, str(e.errors()[0]["msg"])) from e
                return DiagramInput(
                    diagram=document.to_diagram(),
                    source_format=source_format,
                    cuts=document.to_cut_system() if document.cuts else None,
                )
            case InputFormat.PD:
                pd = parse_pd_code(text)
                return DiagramInput(diagram=pd_to_gauss(pd), source_format=source_format, pd=pd)
            case _:
                code = " ".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
                return DiagramInput(diagram=parse_gauss_code(code), source_format=source_format)

    def load_cut_system(self, path: Path) -> CutSystem:
        """Load a cut system file.

        Raises:
            DiagramFileNotFoundError: If the file cannot be read.
            DiagramFormatError: If the content is not a list of ``[circle, gap, count]`` triples.

        """
        data = self._read_json(path)
        entries = data.get("cuts") if isinstance(data, dict) else data
        if not isinstance(entries, list):
            raise DiagramFormatError(path, "expected a list of [circle, gap, count] triples")
        try:
            return CutSystem((Gap(int(c), int(g)), int(n)) for c, g, n in entries)
        except (TypeError, ValueError) as e:
            raise DiagramFormatError(path, "expected a list of [circle, gap, count] triples") from e

    def load_trace(self, path: Path) -> MoveTrace:
        """Load a move trace.

        Raises:
            DiagramFileNotFoundError: If the file cannot be read.
            DiagramFormatError: If the content is not a move trace.

        """
        data = self._read_json(path)
        try:
            payload = data.get("trace", data) if isinstance(data, dict) else data
            return MoveTraceSchema.model_validate(payload).to_trace()
        except ValidationError as e:
            raise DiagramFormatError(path, str(e.errors()[0]["msg"])) from e

    def load_table(self, path: Path) -> list[TableEntry]:
        """Load a knot table.

        Each non-empty line holds one code, optionally preceded by a name
        (``3.1 O1-O2-U1-U2-`` or ``3.1: ...``). Unnamed entries are numbered ``K1``, ``K2``, ... in table order.
        ``#`` starts a comment.

        Raises:
            DiagramFileNotFoundError: If the file cannot be read.
            GaussCodeSyntaxError: If a code is malformed.

        """
        entries = []
        for raw in self._read(path).splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(" ")
            if _GAUSS_TOKEN.match(head):
                name, code = f"K{len(entries) + 1}", line
            else:
                name, code = head.rstrip(":"), rest.strip()
            entries.append(TableEntry(name=name, code=code, diagram=parse_gauss_code(code)))
        logger.info("loaded %d table entries from %s", len(entries), path)
        return entries
