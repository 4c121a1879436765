# shufsq/checkpoint_manager.py
import hashlib
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import orjson as json
import zstandard

from shufsq.errors import CheckpointError

logger = logging.getLogger(__name__)

CHECKPOINT_MAGIC = b"SHUFSQCK"
CHECKPOINT_VERSION = 1
DEFAULT_CHECKPOINT_EVERY = 2**20

_VERSION_BYTES = 2
_DIGEST_BYTES = 32
_HEADER_BYTES = len(CHECKPOINT_MAGIC) + _VERSION_BYTES + _DIGEST_BYTES


def verify_digest(data: bytes, expected: bytes) -> bool:
    """Verifies the SHA-256 digest of a compressed payload."""
    return hashlib.sha256(data).digest() == expected


class CheckpointManager:
    """
    Resumable scan state stored as a single file:
    magic | version (2 bytes, big endian) | sha256 of the body | zstd(orjson).

    The payload records the scan ``kind`` and its ``params``; loading a
    checkpoint written for different parameters is refused.
    """

    def __init__(self, path: Union[str, Path], kind: str, params: Dict[str, Any]):
        self.path = Path(path)
        self.kind = kind
        self.params = params

    def load(self) -> Optional[Dict[str, Any]]:
        """The saved state, or None when no checkpoint exists yet."""
        if not self.path.exists():
            return None
        try:
            raw = self.path.read_bytes()
        except OSError as e:
            raise CheckpointError(f"Cannot read checkpoint {self.path}: {e}")

        if len(raw) < _HEADER_BYTES or not raw.startswith(CHECKPOINT_MAGIC):
            raise CheckpointError(f"{self.path} is not a checkpoint file.")
        offset = len(CHECKPOINT_MAGIC)
        version = int.from_bytes(raw[offset:offset + _VERSION_BYTES], "big")
        if version != CHECKPOINT_VERSION:
            raise CheckpointError(f"{self.path} has version {version}, expected {CHECKPOINT_VERSION}.")
        offset += _VERSION_BYTES
        digest = raw[offset:offset + _DIGEST_BYTES]
        body = raw[_HEADER_BYTES:]
        if not verify_digest(body, digest):
            raise CheckpointError(f"{self.path} failed hash verification; the file is corrupt.")

        try:
            payload = json.loads(zstandard.ZstdDecompressor().decompress(body))
        except (zstandard.ZstdError, json.JSONDecodeError) as e:
            raise CheckpointError(f"Cannot decode checkpoint {self.path}: {e}")

        if payload.get("kind") != self.kind or payload.get("params") != self.params:
            raise CheckpointError(
                f"{self.path} belongs to {payload.get('kind')} {payload.get('params')}, "
                f"not {self.kind} {self.params}."
            )
        logger.info(f"✅ Resuming from checkpoint {self.path}.")
        return payload["state"]

    def save(self, state: Dict[str, Any]) -> bool:
        """Writes the state atomically. Failures are logged and reported as False."""
        payload = {"kind": self.kind, "params": self.params, "state": state}
        body = zstandard.ZstdCompressor().compress(json.dumps(payload))
        header = CHECKPOINT_MAGIC + CHECKPOINT_VERSION.to_bytes(_VERSION_BYTES, "big")
        temporary = self.path.with_name(self.path.name + ".tmp")
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(temporary, "wb") as f:
                f.write(header + hashlib.sha256(body).digest() + body)
            os.replace(temporary, self.path)
        except OSError as e:
            logger.warning(f"⚠️ Could not write checkpoint {self.path}: {e}. Continuing without it.")
            return False
        logger.debug(f"✅ Checkpoint written to {self.path}.")
        return True

    def clear(self):
        try:
            self.path.unlink()
        except FileNotFoundError:
            pass
