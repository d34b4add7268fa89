"""Streaming session server: the wire protocol over WebSocket.

One WebSocket connection is one coaching session. Every message is a single
JSON text document tagged by "type":

  client -> server
    {"type": "hello", "reference": <reference doc | name>, "config": <session config doc>}
    {"type": "frame", "frame": <frame doc>}
    {"type": "end"}
  server -> client
    {"type": "feedback", "feedback": <feedback doc>}
    {"type": "report", "report": <report doc>}
    {"type": "error", "code": "bad-hello" | "bad-frame", "message": <str>}

The first client message must be a hello; anything else draws a bad-hello
error and closes the session. A hello's reference may omit its profile block
(the server recomputes it) or be a bare name resolved against the --refs
directory. After hello, each frame earns exactly one feedback; malformed
frames draw a bad-frame error and the session continues. An end message makes
the server send the session report and close. Sessions are fully independent;
any number may run concurrently.
"""

from __future__ import annotations

import asyncio
import json
import re
from typing import IO, Any

from websockets.asyncio.server import serve
from websockets.exceptions import ConnectionClosed

from .compare import ReferencePose
from .documents import (
    feedback_to_obj,
    frame_from_obj,
    reference_from_obj,
    report_to_obj,
    session_config_from_obj,
)
from .errors import DocumentError, FitTutorError
from .session import Session, SessionConfig

_REF_NAME = re.compile(r"^[A-Za-z0-9_-]+$")


def _dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"), allow_nan=False)


def _error_msg(code: str, message: str) -> str:
    return _dumps({"type": "error", "code": code, "message": message})


class _BadHello(Exception):
    pass


def _load_named_reference(name: str, refs_dir: str | None) -> ReferencePose:
    if refs_dir is None:
        raise _BadHello("server has no reference directory; send a document")
    if not _REF_NAME.match(name):
        raise _BadHello(f"invalid reference name {name!r}")
    try:
        with open(f"{refs_dir}/{name}.json", "rb") as fh:
            return reference_from_obj(json.loads(fh.read().decode("utf-8")))
    except FileNotFoundError:
        raise _BadHello(f"unknown reference {name!r}") from None
    except (OSError, ValueError, DocumentError) as exc:
        raise _BadHello(f"cannot load reference {name!r}: {exc}") from None


def _open_session(raw: str | bytes, refs_dir: str | None) -> Session:
    """Turn the first client message into a Session, or raise _BadHello."""
    try:
        msg = json.loads(raw)
    except (ValueError, UnicodeDecodeError) as exc:
        raise _BadHello(f"not a JSON message: {exc}") from None
    if not isinstance(msg, dict) or msg.get("type") != "hello":
        raise _BadHello("first message must be a hello")
    try:
        config = SessionConfig()
        if "config" in msg:
            config = session_config_from_obj(msg["config"])
        ref_spec = msg.get("reference")
        if isinstance(ref_spec, str):
            ref = _load_named_reference(ref_spec, refs_dir)
        elif isinstance(ref_spec, dict):
            ref = reference_from_obj(ref_spec)
        else:
            raise _BadHello("hello needs a reference document or name")
        if ref.config != config.comparison:
            # Session rules win; rebuild the profile under them.
            ref = ReferencePose(name=ref.name, frame=ref.frame, config=config.comparison)
        return Session(ref, config)
    except (DocumentError, FitTutorError, ValueError) as exc:
        raise _BadHello(str(exc)) from None


async def _handle(ws, refs_dir: str | None) -> None:
    try:
        raw = await ws.recv()
    except ConnectionClosed:
        return
    try:
        session = _open_session(raw, refs_dir)
    except _BadHello as exc:
        await ws.send(_error_msg("bad-hello", str(exc)))
        await ws.close()
        return
    while True:
        try:
            raw = await ws.recv()
        except ConnectionClosed:
            return  # aborted without an end message; nothing more to send
        try:
            msg = json.loads(raw)
        except (ValueError, UnicodeDecodeError) as exc:
            await ws.send(_error_msg("bad-frame", f"not a JSON message: {exc}"))
            continue
        if isinstance(msg, dict) and msg.get("type") == "end":
            await ws.send(_dumps({"type": "report", "report": report_to_obj(session.report())}))
            await ws.close()
            return
        if not isinstance(msg, dict) or msg.get("type") != "frame":
            await ws.send(_error_msg("bad-frame", "expected a frame or end message"))
            continue
        try:
            frame = frame_from_obj(msg.get("frame"))
            feedback = session.feed(frame)
        except (DocumentError, FitTutorError) as exc:
            await ws.send(_error_msg("bad-frame", str(exc)))
            continue
        await ws.send(_dumps({"type": "feedback", "feedback": feedback_to_obj(feedback)}))


def start_server(host: str, port: int, refs_dir: str | None = None):
    """Awaitable context manager for the session server (port 0 for ephemeral)."""
    return serve(lambda ws: _handle(ws, refs_dir), host, port)


async def _serve_forever(host: str, port: int, refs_dir: str | None, log: IO[str] | None) -> None:
    async with start_server(host, port, refs_dir) as server:
        if log is not None:
            bound = server.sockets[0].getsockname()
            print(f"serve: listening on ws://{bound[0]}:{bound[1]}", file=log, flush=True)
        await server.serve_forever()


def run_forever(host: str, port: int, refs_dir: str | None = None, log: IO[str] | None = None) -> None:
    """Blocking entry point used by the CLI."""
    asyncio.run(_serve_forever(host, port, refs_dir, log))
