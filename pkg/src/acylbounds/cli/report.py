"""Plain-text reports: ``key = value`` lines with hypothesis and warning comments."""

import hashlib
from fractions import Fraction
from pathlib import Path


def format_value(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return ",".join(format_value(v) for v in value)
    return str(value)


_RUNTIME_OPTIONS = ("--workers", "--log-level")


def command_line(argv: list[str], files: list[Path] | None = None) -> str:
    """Header command: runtime options dropped, input files by base name."""
    inputs = {Path(p) for p in files or []}
    kept: list[str] = []
    skip = False
    for token in argv:
        if skip:
            skip = False
            continue
        if token.split("=", 1)[0] in _RUNTIME_OPTIONS:
            skip = "=" not in token
            continue
        kept.append(Path(token).name if Path(token) in inputs else token)
    return " ".join(["acylbounds", *kept])


def input_digest(paths: list[Path] | None = None, canonical: str = "") -> str:
    """SHA-256 over input file bytes, or over the canonical argument string."""
    sha = hashlib.sha256()
    if paths:
        for path in paths:
            sha.update(Path(path).read_bytes())
    else:
        sha.update(canonical.encode("utf-8"))
    return sha.hexdigest()


class Report:
    """Collects one command's results; rendering is deterministic."""

    def __init__(self, command: str, digest: str):
        self.command = command
        self.digest = digest
        self._lines: list[tuple[str, str]] = []
        self._hypotheses: list[str] = []
        self._warnings: list[str] = []

    def add(self, key: str, value):
        self._lines.append((key, format_value(value)))

    def hypotheses(self, items):
        for item in items:
            if item not in self._hypotheses:
                self._hypotheses.append(item)

    def warn(self, message: str):
        self._warnings.append(message)

    def value(self, key: str) -> str | None:
        for k, v in self._lines:
            if k == key:
                return v
        return None

    def render(self) -> str:
        out = [f"# command: {self.command}", f"# input-digest: {self.digest}"]
        out.extend(f"{k} = {v}" for k, v in self._lines)
        out.extend(f"# hypothesis: {h}" for h in self._hypotheses)
        out.extend(f"# warning: {w}" for w in self._warnings)
        return "\n".join(out) + "\n"
