"""Matrix and payload file I/O.

Two on-disk matrix formats are accepted:

* JSON ``{"n": int, "re": [[...]], "im": [[...]]}`` with ``im`` optional
  (defaults to zeros); written by :func:`save_matrix`;
* a whitespace text format, one matrix row per line, entries as ``a+bi``
  tokens (``i``, ``I`` or ``j`` mark the imaginary unit); read-only.

Both parsers reject non-finite entries. Scalar-lemma check payloads
(``lu``, ``numbers``) are JSON objects documented in
:func:`load_check_payload`.
"""
from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from .errors import ParseError


def sha256_digest(path) -> str:
    """Hex SHA-256 of the file's raw bytes."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _finite_or_raise(M: np.ndarray, path) -> np.ndarray:
    if not np.isfinite(M).all():
        raise ParseError(f"{path}: non-finite entries are not accepted")
    return M


def _matrix_from_json(obj, path) -> np.ndarray:
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected a JSON object with n/re/im")
    try:
        n = int(obj["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: missing or bad field 'n'") from exc
    if n < 1:
        raise ParseError(f"{path}: n must be positive, got {n}")
    if "re" not in obj:
        raise ParseError(f"{path}: missing field 're'")
    try:
        re_part = np.asarray(obj["re"], dtype=np.float64)
        im_raw = obj.get("im")
        im_part = (
            np.zeros((n, n)) if im_raw is None else np.asarray(im_raw, dtype=np.float64)
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: re/im must be numeric arrays") from exc
    if re_part.shape != (n, n) or im_part.shape != (n, n):
        raise ParseError(
            f"{path}: array shapes {re_part.shape}/{im_part.shape} do not match n = {n}"
        )
    return _finite_or_raise(re_part + 1j * im_part, path)


def _token_to_complex(token: str, path, row: int, col: int) -> complex:
    normalized = token.replace("i", "j").replace("I", "j")
    try:
        return complex(normalized)
    except ValueError as exc:
        raise ParseError(
            f"{path}: row {row + 1}, entry {col + 1}: cannot parse {token!r}"
        ) from exc


def _matrix_from_text(text: str, path) -> np.ndarray:
    rows = []
    for lineno, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        rows.append(
            [
                _token_to_complex(tok, path, len(rows), c)
                for c, tok in enumerate(line.split())
            ]
        )
    if not rows:
        raise ParseError(f"{path}: no matrix rows found")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError(f"{path}: rows have unequal lengths")
    if len(rows) != width:
        raise ParseError(f"{path}: matrix must be square, got {len(rows)}x{width}")
    return _finite_or_raise(np.asarray(rows, dtype=np.complex128), path)


def load_matrix(path) -> np.ndarray:
    """Load a square complex matrix from a JSON or text matrix file.

    The format is detected from the content (JSON starts with ``{``), not
    the extension.

    :raises ParseError: on any structural or numeric problem
    """
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from exc
        return _matrix_from_json(obj, path)
    return _matrix_from_text(text, path)


def save_matrix(path, X) -> None:
    """Write a matrix in the JSON ``{n, re, im}`` format."""
    M = np.atleast_2d(np.asarray(X, dtype=np.complex128))
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ParseError(f"only square matrices are saved, got shape {M.shape}")
    payload = {"n": int(M.shape[0]), "re": M.real.tolist(), "im": M.imag.tolist()}
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _real_vector(obj, path, key) -> np.ndarray:
    try:
        v = np.asarray(obj[key], dtype=np.float64).ravel()
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: missing or bad field {key!r}") from exc
    return _finite_or_raise(v, path)


def _weight_matrix(obj, path) -> np.ndarray:
    try:
        R = np.asarray(obj["r"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: missing or bad field 'r'") from exc
    if R.ndim != 2:
        raise ParseError(f"{path}: 'r' must be a 2-D array")
    return _finite_or_raise(R, path)


def load_check_payload(path, kind: str):
    """Load a scalar-lemma payload file.

    * ``kind="lu"``: ``{"etas": ..., "r": [[...]]}`` where ``etas`` is a
      list of reals or ``{"re": [...], "im": [...]}`` for complex values;
      returns ``(etas, r)``. The etas must already be centered and unit
      (see :func:`commspectra.conjectures.center_normalize`).
    * ``kind="numbers"``: ``{"etas": [...], "omegas": [...], "r": [[...]]}``
      with real entries; returns ``(etas, omegas, r)``.
    """
    p = Path(path)
    try:
        obj = json.loads(p.read_text())
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError(f"{path}: expected a JSON object")
    if kind == "lu":
        raw = obj.get("etas")
        if isinstance(raw, dict):
            re_part = _real_vector(raw, path, "re")
            im_raw = raw.get("im")
            im_part = (
                np.zeros_like(re_part)
                if im_raw is None
                else _real_vector(raw, path, "im")
            )
            if re_part.shape != im_part.shape:
                raise ParseError(f"{path}: etas re/im lengths differ")
            etas = re_part + 1j * im_part
        else:
            etas = _real_vector(obj, path, "etas").astype(np.complex128)
        return etas, _weight_matrix(obj, path)
    if kind == "numbers":
        return (
            _real_vector(obj, path, "etas"),
            _real_vector(obj, path, "omegas"),
            _weight_matrix(obj, path),
        )
    raise ParseError(f"unknown payload kind {kind!r}")
