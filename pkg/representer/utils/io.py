import csv
import io
import logging
import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence, Type, TypeVar

from pydantic import BaseModel, ValidationError

from representer.constants import ErrorMessages
from representer.errors import SchemaError

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


def atomic_write_text(path, text: str) -> Path:
    """
    Writes to a temporary file in the target directory, then renames it over `path`.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.debug("Wrote %s", path)
    return path


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    """
    Comma-separated, header row, LF line endings; floats in shortest round-trip form.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return atomic_write_text(path, buffer.getvalue())


def write_model(path, model: BaseModel) -> Path:
    return atomic_write_text(path, model.model_dump_json(indent=2) + "\n")


def format_validation_error(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        loc = ".".join(str(part) for part in err["loc"])
        lines.append(f"{loc}: {err['msg']}" if loc else err["msg"])
    return "; ".join(lines)


def read_model(path, model: Type[M]) -> M:
    """
    Loads and validates a JSON file.

    Raises:
        SchemaError: unreadable file, malformed JSON (with position) or a failed field check
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"{ErrorMessages.FILE_UNREADABLE} {path}: {exc.strerror}") from exc
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        raise SchemaError(f"{ErrorMessages.SCHEMA_INVALID} {path}: {format_validation_error(exc)}") from exc
