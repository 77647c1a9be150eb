"""
Deterministic JSON and CSV output.

JSON is written with sorted keys and the shortest round-trip float
representation, so identical reports give byte-identical files. Non-finite
floats are written as null. CSV values carry 17 significant digits.
"""

import csv
import json
from pathlib import Path
from typing import Iterable, Optional, Sequence, Type, TypeVar

from pydantic import BaseModel

ModelT = TypeVar("ModelT", bound=BaseModel)

CSV_FORMAT = ".17g"


def dump_json(model: BaseModel) -> str:
    """Canonical JSON text of a model."""
    # pydantic serializes NaN and infinities as null
    payload = json.loads(model.model_dump_json(by_alias=True))
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_json(model: BaseModel, path: Optional[str]) -> str:
    """
    Write a model as canonical JSON.

    Args:
        model: Model to write
        path: Output file; None returns the text without writing

    Returns:
        str: The JSON text
    """
    text = dump_json(model)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_model(model_type: Type[ModelT], path: str) -> ModelT:
    """
    Read and validate a JSON file.

    Raises:
        OSError: If the file cannot be read
        pydantic.ValidationError: If the content does not match the model
    """
    return model_type.model_validate_json(Path(path).read_text(encoding="utf-8"))


def format_float(value: float) -> str:
    return format(float(value), CSV_FORMAT)


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence[float]]) -> int:
    """
    Write numeric rows with 17 significant digits.

    Returns:
        int: Number of rows written
    """
    count = 0
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(value) for value in row])
            count += 1
    return count
