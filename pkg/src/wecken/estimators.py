"""scikit-learn style wrappers for batch queries over arrays of dimensions.

Nothing is learned: ``fit`` only loads the knowledge base and validates
parameters, so the wrappers can sit inside pipelines and grid searches.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .analyzer import GroupContext, MapFacts, analyze_self
from .classifier import wecken
from .ehp import DimPair
from .knowledge import load_kb
from .verdict import DomainError, InconsistentFactsError, Truth

WECKEN_LABELS = np.array(["holds", "fails", "open", "conditional"])
_LABEL_OF = {Truth.YES: "holds", Truth.NO: "fails", Truth.OPEN: "open", Truth.CONDITIONAL: "conditional"}

FACT_COLUMNS = ("double_zero", "kervaire_one", "torsion_le_2", "hopf_half_even",
                "desusp_double_zero", "h0_of_class_zero", "condition_vi")
OUTPUT_COLUMNS = ("nielsen", "mcc", "mc", "loose", "loose_by_small_deformation", "seven_conditions")


def check_dims(X, *, min_cols: int = 2, max_cols: int = 2) -> np.ndarray:
    """2-D array whose first two columns are positive integer ``(m, n)``."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 1 and arr.size in range(min_cols, max_cols + 1):
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
    if not min_cols <= arr.shape[1] <= max_cols:
        raise ValueError(f"expected {min_cols}..{max_cols} columns, got {arr.shape[1]}")
    dims = arr[:, :2]
    if not np.all(np.isfinite(dims)) or np.any(dims != np.round(dims)):
        raise ValueError("m and n must be finite integers")
    if np.any(dims < 1):
        raise ValueError("m and n must be >= 1")
    return arr


def check_facts(block: np.ndarray) -> np.ndarray:
    """Fact columns hold 0, 1 or NaN (unknown)."""
    ok = np.isnan(block) | (block == 0) | (block == 1)
    if not ok.all():
        r, c = np.argwhere(~ok)[0]
        raise ValueError(f"fact column {FACT_COLUMNS[c]} row {r}: expected 0, 1 or NaN, got {block[r, c]}")
    return block


def _tri(x: float) -> bool | None:
    return None if np.isnan(x) else bool(x)


def _num(v: Truth) -> float:
    return {Truth.YES: 1.0, Truth.NO: 0.0}.get(v, np.nan)


class WeckenClassifier(ClassifierMixin, BaseEstimator):
    """Predicts the Wecken verdict for rows ``(m, n)``.

    Labels: ``holds``, ``fails``, ``open``, ``conditional``.
    """

    def __init__(self, facts_dir=None, use_low_rule=True):
        self.facts_dir = facts_dir
        self.use_low_rule = use_low_rule

    def fit(self, X, y=None):
        check_dims(X)
        self.kb_ = load_kb(self.facts_dir)
        self.classes_ = WECKEN_LABELS.copy()
        self.n_features_in_ = 2
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "kb_")
        arr = check_dims(X).astype(int)
        out = [_LABEL_OF[wecken(DimPair(int(m), int(n)), self.kb_, use_low_rule=self.use_low_rule).value]
               for m, n in arr]
        return np.array(out, dtype=WECKEN_LABELS.dtype if out else object)

    def predict_conditions(self, X) -> list[str | None]:
        """The halvability condition behind each ``conditional`` label, else ``None``."""
        check_is_fitted(self, "kb_")
        return [wecken(DimPair(int(m), int(n)), self.kb_, use_low_rule=self.use_low_rule).condition
                for m, n in check_dims(X).astype(int)]


class SelfCoincidenceAnalyzer(TransformerMixin, BaseEstimator):
    """Maps rows ``[m, n, facts...]`` to selfcoincidence invariants.

    Fact columns follow ``FACT_COLUMNS`` and may be omitted from the right;
    NaN means unknown. Output columns follow ``OUTPUT_COLUMNS``, with
    truth values as 1/0 and NaN for anything undetermined.
    ``on_inconsistent`` is ``"raise"`` or ``"nan"`` (blank the row).
    """

    def __init__(self, group="z2", facts_dir=None, on_inconsistent="raise"):
        self.group = group
        self.facts_dir = facts_dir
        self.on_inconsistent = on_inconsistent

    def fit(self, X, y=None):
        arr = check_dims(X, max_cols=2 + len(FACT_COLUMNS))
        if self.on_inconsistent not in ("raise", "nan"):
            raise ValueError(f"on_inconsistent must be 'raise' or 'nan', got {self.on_inconsistent!r}")
        try:
            self.group_ = GroupContext.parse(self.group) if isinstance(self.group, str) else self.group
        except DomainError as e:
            raise ValueError(str(e)) from None
        self.kb_ = load_kb(self.facts_dir)
        self.n_features_in_ = arr.shape[1]
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "kb_")
        arr = check_dims(X, max_cols=2 + len(FACT_COLUMNS))
        facts = check_facts(arr[:, 2:])
        out = np.full((arr.shape[0], len(OUTPUT_COLUMNS)), np.nan)
        for i, row in enumerate(arr):
            mf = dict(zip(FACT_COLUMNS, (_tri(x) for x in facts[i])))
            try:
                r = analyze_self(DimPair(int(row[0]), int(row[1])), self.group_, MapFacts(**mf), self.kb_)
            except InconsistentFactsError:
                if self.on_inconsistent == "raise":
                    raise
                continue
            out[i] = [
                np.nan if r.nielsen is None else r.nielsen,
                np.nan if r.mcc is None else r.mcc,
                np.nan if r.mc is None else r.mc,
                _num(r.loose.value),
                _num(r.loose_by_small_deformation.value),
                _num(r.seven_conditions.value),
            ]
        return out

    def get_feature_names_out(self, input_features=None) -> np.ndarray:
        return np.array(OUTPUT_COLUMNS, dtype=object)


__all__ = [
    "FACT_COLUMNS",
    "OUTPUT_COLUMNS",
    "SelfCoincidenceAnalyzer",
    "WeckenClassifier",
    "check_dims",
    "check_facts",
]
