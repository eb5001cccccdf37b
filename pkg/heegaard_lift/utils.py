import json
import logging
import sys
from typing import Any

from pydantic import BaseModel

from heegaard_lift.settings import Settings

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def configure_logging(settings: Settings) -> None:
    """
    Installs a single stderr handler on the package logger.

    :param settings: Project settings, read for LOG_LEVEL.
    """
    logger = logging.getLogger('heegaard_lift')
    logger.setLevel(settings.LOG_LEVEL.upper())
    if not any(
        getattr(handler, '_heegaard_lift', False)
        for handler in logger.handlers
    ):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._heegaard_lift = True  # type: ignore[attr-defined]
        logger.addHandler(handler)


def dump_json(payload: BaseModel | dict[str, Any] | list[Any]) -> str:
    """
    Serializes a report deterministically.

    :return: JSON text with sorted keys and a trailing newline.
    """
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode='json')
    return json.dumps(payload, sort_keys=True, indent=2) + '\n'


def parse_int_list(text: str) -> list[int]:
    """
    Parses a comma separated list such as ``3,-3,5``.

    :return: list of integers.
    """
    items = [item.strip() for item in text.split(',')]
    if not items or any(not item for item in items):
        raise ValueError(f'Malformed integer list: {text!r}')
    return [int(item) for item in items]
