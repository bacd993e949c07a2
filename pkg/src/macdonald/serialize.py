"""Versioned JSON for Laurent polynomials and an on-disk cache of E_mu."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import random
from pathlib import Path
from typing import Optional, Sequence

from .algebra import Coeff, LaurentPoly, _from_terms
from .weyl import as_comp, sort_desc_dblex

SCHEMA_VERSION = 1
CACHE_ENV = "MACDONALD_CACHE_DIR"

log = logging.getLogger("macdonald")


def _coeff_terms(d) -> list:
    return [[int(a), int(b), str(c)] for (a, b), c in sorted(d.items(), reverse=True)]


def to_json(f: LaurentPoly) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "n": f.n,
        "terms": [
            {
                "exp": list(e),
                "num": _coeff_terms(f.terms[e].num_terms),
                "den": _coeff_terms(f.terms[e].den_terms),
            }
            for e in sort_desc_dblex(f.terms)
        ],
        "human": str(f),
    }


def dumps(f: LaurentPoly) -> str:
    return json.dumps(to_json(f), sort_keys=True)


def from_json(doc: dict) -> LaurentPoly:
    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    n = int(doc["n"])
    terms = {}
    for term in doc["terms"]:
        num = _from_terms({(int(a), int(b)): int(c) for a, b, c in term["num"]})
        den = _from_terms({(int(a), int(b)): int(c) for a, b, c in term["den"]})
        terms[tuple(int(x) for x in term["exp"])] = Coeff(num, den)
    return LaurentPoly(n, terms)


def loads(text: str) -> LaurentPoly:
    return from_json(json.loads(text))


def default_cache_dir() -> Optional[Path]:
    d = os.environ.get(CACHE_ENV)
    return Path(d) if d else None


class DiskCache:
    """One JSON file per (n, mu), named by a hash of the key."""

    def __init__(self, directory, rng: Optional[random.Random] = None):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.rng = rng or random.Random()

    def path(self, mu: Sequence[int]) -> Path:
        key = f"E:{len(mu)}:{','.join(str(a) for a in mu)}"
        return self.dir / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".json")

    def store(self, mu: Sequence[int], f: LaurentPoly):
        mu = as_comp(mu)
        doc = {"key": {"n": len(mu), "mu": list(mu)}, "poly": to_json(f)}
        tmp = self.path(mu).with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, sort_keys=True))
        tmp.replace(self.path(mu))

    def _revalidate(self, mu, f: LaurentPoly) -> bool:
        from .operators import Y_eigenvalue, apply_Y

        i = self.rng.randint(1, len(mu))
        return apply_Y(i, f) == f.scale(Y_eigenvalue(mu, i))

    def load(self, mu: Sequence[int]) -> Optional[LaurentPoly]:
        """The cached E_mu, or None if absent or unusable."""
        mu = as_comp(mu)
        p = self.path(mu)
        if not p.exists():
            return None
        try:
            doc = json.loads(p.read_text())
            if doc["key"] != {"n": len(mu), "mu": list(mu)}:
                raise ValueError("key mismatch")
            f = from_json(doc["poly"])
            if not self._revalidate(mu, f):
                raise ValueError("eigenvalue check failed")
        except Exception as exc:  # any defect means recompute
            log.warning("discarding corrupt cache entry %s for mu=%s: %s", p.name, mu, exc)
            return None
        return f

    def E(self, mu: Sequence[int]) -> LaurentPoly:
        from .polynomials import E

        f = self.load(mu)
        if f is None:
            f = E(mu)
            self.store(mu, f)
        return f
