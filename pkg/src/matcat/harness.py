"""
Run configuration, suite dispatch and the morphism expression evaluator.
"""

from __future__ import annotations

import random
import re
import time
from dataclasses import dataclass
from fractions import Fraction

from matcat.anchors import anchor_for
from matcat.base import GradedObject, identity_c, make_base
from matcat.bialgebra import HBar, identity_gamma, verify_suite
from matcat.category import (
    UNIT_OBJECT, MatMorphism, TensorObject, assoc, braid_m, mat_compose, mat_id,
    tensor_mor_m, twist_m, units)
from matcat.errors import MatcatError, MembershipError, UsageError
from matcat.index import pair
from matcat.report import CheckReport
from matcat.suites import base_suite, coherence_suite, matcat_suite

TARGETS = ("base", "matcat", "coherence", "bialgebra", "all")


@dataclass(frozen=True)
class RunConfig:
    q: Fraction = Fraction(2)
    max_degree: int = 2
    max_dim: int = 2
    probe_rows: int = 25
    seed: int = 0
    instance: str = "graded"
    report_format: str = "json"

    def __post_init__(self):
        try:
            object.__setattr__(self, "q", Fraction(self.q))
        except (ValueError, TypeError, ZeroDivisionError):
            raise UsageError("q must be a rational number, got %r" % (self.q,))
        if self.q == 0:
            raise UsageError("q must be nonzero")
        for name in ("max_degree", "max_dim", "seed"):
            if not isinstance(getattr(self, name), int):
                raise UsageError("%s must be an integer" % name)
        if self.max_degree < 0 or self.max_dim < 0:
            raise UsageError("bounds must be nonnegative")
        if not isinstance(self.probe_rows, int) or self.probe_rows < 1:
            raise UsageError("probe_rows must be at least 1")
        if self.instance not in ("graded", "symmetric"):
            raise UsageError("instance must be 'graded' or 'symmetric'")
        if self.report_format not in ("json", "text"):
            raise UsageError("report_format must be 'json' or 'text'")

    def as_dict(self) -> dict:
        q = self.q
        return {"q": str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator),
                "max_degree": self.max_degree, "max_dim": self.max_dim,
                "probe_rows": self.probe_rows, "seed": self.seed,
                "instance": self.instance, "report_format": self.report_format}

    def base(self):
        return make_base(self.instance, self.q)


def _suite_outcomes(target, cfg: RunConfig, hbar_options: dict):
    base = cfg.base()
    rng = random.Random("%s:%d" % (target, cfg.seed))
    if target == "base":
        return base_suite(base, cfg.max_degree, cfg.max_dim, rng, morphisms=max(20, cfg.probe_rows))
    if target == "matcat":
        return matcat_suite(base, cfg.max_degree, cfg.max_dim, rng, probe_rows=cfg.probe_rows)
    if target == "coherence":
        return coherence_suite(base, cfg.max_degree, cfg.max_dim, rng, probe_rows=cfg.probe_rows)
    hbar = HBar(base, **hbar_options)
    return verify_suite(hbar, base.objects(cfg.max_degree, cfg.max_dim), rows=cfg.probe_rows,
                        seed=cfg.seed)


def run_suite(target: str, cfg: RunConfig, timings: bool = False,
              hbar_options: dict = None) -> list[CheckReport]:
    """Run one suite (or all of them in order) and return one report per check.

    ``elapsed`` is filled only when ``timings`` is set, so reports are
    byte-identical across runs with the same configuration.
    """
    if target not in TARGETS:
        raise UsageError("unknown target %r" % (target,))
    targets = TARGETS[:-1] if target == "all" else (target,)
    reports = []
    for t in targets:
        start = time.perf_counter()
        outcomes = _suite_outcomes(t, cfg, hbar_options or {})
        per = (time.perf_counter() - start) / max(1, len(outcomes))
        for o in outcomes:
            cid = "%s.%s" % (t, o.check_id)
            witness = o.witness
            if witness is not None and o.detail:
                witness = dict(witness, note=o.detail)
            reports.append(CheckReport(cid, anchor_for(cid), "pass" if o.passed else "fail",
                                       witness, round(per, 6) if timings else None))
    return reports


def mutated_options(name: str) -> dict:
    """HBar options for the two sabotage variants."""
    if name == "gamma-identity":
        return {"gamma": identity_gamma}
    if name == "no-middle-braid":
        return {"middle_braid": False}
    raise UsageError("unknown mutation %r" % (name,))


# -- expression evaluation -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[∘@⊗&()]))")


class _Parser:
    """``expr := term (('∘'|'@') term)*``, ``term := atom (('⊗'|'&') atom)*``.

    Composition binds looser than tensor.
    """

    def __init__(self, text, env):
        self.toks = self._lex(text)
        self.pos = 0
        self.env = env

    @staticmethod
    def _lex(text):
        toks, i = [], 0
        text = text.strip()
        while i < len(text):
            m = _TOKEN.match(text, i)
            if not m or m.end() == i:
                raise UsageError("cannot parse expression at %r" % text[i:])
            toks.append(m.group("name") or m.group("op"))
            i = m.end()
            while i < len(text) and text[i].isspace():
                i += 1
        return toks

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse(self):
        if not self.toks:
            raise UsageError("empty expression")
        m = self.expr()
        if self.peek() is not None:
            raise UsageError("unexpected token %r" % self.peek())
        return m

    def expr(self):
        m = self.term()
        while self.peek() in ("∘", "@"):
            self.take()
            rhs = self.term()
            try:
                m = mat_compose(m, rhs)
            except MatcatError as e:
                raise UsageError("cannot compose: %s" % e)
        return m

    def term(self):
        m = self.atom()
        while self.peek() in ("⊗", "&"):
            self.take()
            m = tensor_mor_m(m, self.atom())
        return m

    def atom(self):
        t = self.take()
        if t == "(":
            m = self.expr()
            if self.take() != ")":
                raise UsageError("missing ')'")
            return m
        if t in self.env:
            return self.env[t]
        raise UsageError("unknown morphism %r" % (t,))


def morphism_env(cfg: RunConfig, V: GradedObject = None) -> dict[str, MatMorphism]:
    """Named morphisms available to :func:`eval_morphism`; all live on h-bar."""
    base = cfg.base()
    hb = HBar(base)
    H = hb.obj
    V = V if V is not None else GradedObject((0,))
    return {
        "mu": hb.mu, "eta": hb.eta, "delta": hb.delta, "epsilon": hb.epsilon,
        "mu_hat": hb.mu_hat.mor,
        "A": assoc(H, H, H), "Ainv": assoc(H, H, H, inverse=True),
        "C": braid_m(base, H, H), "Cinv": braid_m(base, H, H, inverse=True),
        "Theta": twist_m(base, H),
        "R": units(H, "right"), "L": units(H, "left"),
        "T": hb.action_T(V),
        "Id": mat_id(H), "IdI": mat_id(UNIT_OBJECT),
    }


_ROW_ENC = re.compile(r"^enc\(([-\d,\s]*)\)$")
_ROW_PAIR = re.compile(r"^pair\((.*)\)$")


def parse_row(text: str, cfg: RunConfig) -> int:
    """Row index: an integer, ``*`` (the unit point), ``enc(d1,...)`` for the
    h-bar index of an object, or ``pair(a, b)`` of such rows."""
    text = text.strip()
    if text == "*":
        return 0
    if re.fullmatch(r"\d+", text):
        return int(text)
    m = _ROW_ENC.match(text)
    if m:
        degs = tuple(int(s) for s in m.group(1).split(",") if s.strip())
        hb = HBar(cfg.base())
        try:
            return hb.diag(GradedObject(degs))
        except MatcatError as e:
            raise UsageError(str(e))
    m = _ROW_PAIR.match(text)
    if m:
        inner = m.group(1)
        depth = 0
        for i, ch in enumerate(inner):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "," and depth == 0:
                return pair(parse_row(inner[:i], cfg), parse_row(inner[i + 1:], cfg))
    raise UsageError("cannot parse row %r" % (text,))


def eval_morphism(expr: str, row, cfg: RunConfig) -> str:
    """Render the finite row ``row`` of the morphism named by ``expr``."""
    F = _Parser(expr, morphism_env(cfg)).parse()
    x = parse_row(row, cfg) if isinstance(row, str) else row
    try:
        r = F.row(x)
    except MembershipError as e:
        raise UsageError("row %s is not in the domain: %s" % (x, e))
    lines = ["%s row %d: %d nonzero entr%s" % (expr, x, len(r), "y" if len(r) == 1 else "ies")]
    for y, e in r.items():
        tag = " (identity)" if e.src == e.dst and e == identity_c(e.src) else ""
        lines.append("  -> %d: %r -> %r %s%s" % (y, e.src, e.dst, e.block_str(), tag))
    return "\n".join(lines) + "\n"
