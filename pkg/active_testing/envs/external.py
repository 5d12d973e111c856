"""
Client for simulators running as a child process.

The protocol is line-delimited JSON over the child's stdin/stdout. The child
announces itself with one handshake line

    {"protocol": 1, "mode": "trajectory" | "mu", "dim": D, "predicates": [...]}

and then answers every request {"id": k, "w": [...]} with exactly one line,
either {"id": k, "trajectory": {"t": [...], "channels": {...}}} or
{"id": k, "mu": {name: value}} depending on the announced mode. Floats are
written with repr, which round-trips doubles exactly.
"""

from __future__ import annotations

import json
import logging
import math
import queue
import subprocess
import threading
from collections.abc import Mapping
from collections.abc import Sequence
from enum import StrEnum

import numpy as np

from active_testing.exceptions import ProtocolError

from .trajectory import Trajectory

logger = logging.getLogger(__name__)

PROTOCOL_VERSION = 1
_EOF = object()


class ReplyMode(StrEnum):
    TRAJECTORY = "trajectory"
    MU = "mu"


class ExternalSimulator:
    def __init__(  # noqa: PLR0913
        self,
        command: Sequence[str],
        *,
        dim: int,
        mode: ReplyMode | str | None = None,
        predicates: Sequence[str] = (),
        timeout: float = 60.0,
        cwd: str | None = None,
    ):
        self.command = list(command)
        self.dim = dim
        self.mode = ReplyMode(mode) if mode else None
        self.predicates = tuple(predicates)
        self.timeout = timeout
        self.cwd = cwd
        self.process: subprocess.Popen | None = None
        self._lines: queue.Queue = queue.Queue()
        self._next_id = 1

    # Lifecycle
    # --------------------------------------------------------------------------
    def start(self) -> None:
        logger.info("Starting external simulator: %s", " ".join(self.command))
        try:
            self.process = subprocess.Popen(  # noqa: S603
                self.command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                encoding="utf-8",
                bufsize=1,
                cwd=self.cwd,
            )
        except OSError as exc:
            msg = f"could not start simulator {self.command[0]!r}: {exc}"
            raise ProtocolError(msg) from exc
        threading.Thread(target=self._pump, args=(self.process.stdout,), daemon=True).start()
        self._handshake(self._read(request_id=None))

    def close(self) -> None:
        if self.process is None:
            return
        process, self.process = self.process, None
        try:
            if process.stdin:
                process.stdin.close()
            process.wait(timeout=5)
        except (OSError, subprocess.TimeoutExpired):
            process.kill()
            process.wait()

    def __enter__(self) -> ExternalSimulator:
        self.start()
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()

    def _pump(self, stream) -> None:
        for line in stream:
            self._lines.put(line)
        self._lines.put(_EOF)

    # Protocol
    # --------------------------------------------------------------------------
    def _handshake(self, message: Mapping) -> None:
        if message.get("protocol") != PROTOCOL_VERSION:
            msg = f"unsupported protocol version {message.get('protocol')!r}"
            raise self._fail(msg, None, message)
        try:
            announced = ReplyMode(message.get("mode"))
        except ValueError:
            msg = f"unknown reply mode {message.get('mode')!r}"
            raise self._fail(msg, None, message) from None
        if self.mode is not None and announced != self.mode:
            msg = f"simulator replies with {announced}, configuration expects {self.mode}"
            raise self._fail(msg, None, message)
        if message.get("dim") != self.dim:
            msg = f"simulator expects {message.get('dim')!r} parameters, the domain has {self.dim}"
            raise self._fail(msg, None, message)
        announced_predicates = tuple(message.get("predicates", ()))
        missing = [name for name in self.predicates if name not in announced_predicates]
        if announced == ReplyMode.MU and missing:
            msg = f"simulator does not provide predicates {', '.join(missing)}"
            raise self._fail(msg, None, message)
        self.mode = announced
        self.predicates = announced_predicates or self.predicates
        logger.debug("Handshake complete: %s", message)

    def simulate(self, w: Sequence[float]) -> Trajectory | dict[str, float]:
        """Send one request and return the trajectory or predicate values from the reply."""
        if self.process is None:
            msg = "simulator is not running"
            raise ProtocolError(msg)
        point = [float(v) for v in np.asarray(w, dtype=float).reshape(-1)]
        if len(point) != self.dim:
            msg = f"expected {self.dim} parameters, got {len(point)}"
            raise ProtocolError(msg)
        request_id = self._next_id
        self._next_id += 1
        request = json.dumps({"id": request_id, "w": point})
        try:
            self.process.stdin.write(request + "\n")
            self.process.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            msg = f"simulator exited (code {self.process.poll()})"
            raise self._fail(msg, request_id, request) from exc
        reply = self._read(request_id)
        if reply.get("id") != request_id:
            msg = f"reply id {reply.get('id')!r} does not match"
            raise self._fail(msg, request_id, reply)
        return self._decode(reply, request_id)

    def _decode(self, reply: Mapping, request_id: int) -> Trajectory | dict[str, float]:
        if self.mode == ReplyMode.TRAJECTORY:
            if "trajectory" not in reply:
                msg = "reply has no trajectory"
                raise self._fail(msg, request_id, reply)
            return Trajectory.from_dict(reply["trajectory"])
        values = reply.get("mu")
        if not isinstance(values, Mapping):
            msg = "reply has no mu object"
            raise self._fail(msg, request_id, reply)
        try:
            mu = {str(name): float(value) for name, value in values.items()}
        except (TypeError, ValueError):
            msg = "predicate values must be numbers"
            raise self._fail(msg, request_id, reply) from None
        missing = [name for name in self.predicates if name not in mu]
        if missing or not all(math.isfinite(v) for v in mu.values()):
            msg = f"reply lacks finite values for {', '.join(missing) or 'some predicates'}"
            raise self._fail(msg, request_id, reply)
        return mu

    def _read(self, request_id: int | None) -> dict:
        try:
            line = self._lines.get(timeout=self.timeout)
        except queue.Empty:
            msg = f"no reply within {self.timeout:g} s"
            raise self._fail(msg, request_id, None) from None
        if line is _EOF:
            code = self.process.wait() if self.process else None
            msg = f"simulator exited (code {code})"
            raise self._fail(msg, request_id, None)
        try:
            message = json.loads(line)
        except json.JSONDecodeError:
            msg = "malformed reply"
            raise self._fail(msg, request_id, line.rstrip("\n")) from None
        if not isinstance(message, dict):
            msg = "reply is not a JSON object"
            raise self._fail(msg, request_id, line.rstrip("\n"))
        return message

    def _fail(self, message: str, request_id: int | None, payload) -> ProtocolError:
        text = payload if isinstance(payload, str) or payload is None else json.dumps(payload)
        logger.error("Simulator protocol error: %s (request %s, payload %s)", message, request_id, text)
        return ProtocolError(message, request_id=request_id, payload=text)
