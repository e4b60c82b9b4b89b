"""Estimator wrappers so the solvers plug into scikit-learn tooling.

Each estimator takes an ``(n_samples, 2)`` array of disk centres. ``fit``
solves the instance; ``fit_predict`` returns one label per point (0/1
membership for total domination, 0/1/2 Roman labels for total Roman
domination).
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .approx import tds_udg_sc, trdf_udg_sc, verify_tds, verify_trdf
from .exact import TDS_LIMIT, TRDF_LIMIT, exact_min_tds, exact_min_trdf
from .geometry import PointSet, UnitDiskGraph, build_udg

METHODS = ("approx", "exact")


def check_points(X) -> np.ndarray:
    """Validate a point array: 2-D, two finite float columns, at least one row."""
    X = check_array(X, dtype=np.float64, ensure_2d=True, ensure_min_samples=1)
    if X.shape[1] != 2:
        raise ValueError(f"expected points with 2 coordinates, got {X.shape[1]} columns")
    return X


def _graph(X, radius) -> UnitDiskGraph:
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    return build_udg(PointSet.from_coords(X.tolist(), radius))


class _DominationEstimator(BaseEstimator):
    def __init__(self, radius=1.0, method="approx", exact_limit=None):
        self.radius = radius
        self.method = method
        self.exact_limit = exact_limit

    def _check_method(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    def predict(self, X=None):
        """Labels of the fitted instance; the solution is transductive."""
        check_is_fitted(self, "labels_")
        if X is not None:
            X = check_points(X)
            if X.shape != self.points_.shape or not np.array_equal(X, self.points_):
                raise ValueError("predict only supports the points passed to fit")
        return self.labels_


class TotalDominatingSetUDG(_DominationEstimator):
    """Total dominating set of the unit disk graph on the given points.

    Fitted attributes: ``graph_``, ``points_``, ``members_``, ``labels_``
    (1 for members), ``independent_`` and ``connectors_`` (approx only),
    ``n_features_in_``.
    """

    def fit(self, X, y=None):
        self._check_method()
        X = check_points(X)
        g = _graph(X, self.radius)
        if self.method == "approx":
            sol = tds_udg_sc(g)
            self.independent_ = np.array(sol.independent, dtype=int)
            self.connectors_ = np.array(sol.connectors, dtype=int)
        else:
            limit = TDS_LIMIT if self.exact_limit is None else self.exact_limit
            sol = exact_min_tds(g, limit=limit).witness
        assert verify_tds(g, sol)
        self.graph_ = g
        self.points_ = X
        self.members_ = np.array(sol.members, dtype=int)
        labels = np.zeros(len(X), dtype=int)
        labels[self.members_] = 1
        self.labels_ = labels
        self.n_features_in_ = X.shape[1]
        return self

    def score(self, X=None, y=None):
        """Negative set size, so larger is better."""
        check_is_fitted(self, "members_")
        return -float(len(self.members_))


class TotalRomanDominationUDG(_DominationEstimator):
    """Total Roman dominating function on the given points.

    Fitted attributes: ``graph_``, ``points_``, ``labels_`` (0, 1 or 2 per
    point), ``weight_``, ``n_features_in_``.
    """

    def fit(self, X, y=None):
        self._check_method()
        X = check_points(X)
        g = _graph(X, self.radius)
        if self.method == "approx":
            f = trdf_udg_sc(g)
        else:
            limit = TRDF_LIMIT if self.exact_limit is None else self.exact_limit
            f = exact_min_trdf(g, limit=limit).witness
        assert verify_trdf(g, f)
        self.graph_ = g
        self.points_ = X
        self.labels_ = np.array(f.values, dtype=int)
        self.weight_ = f.weight
        self.n_features_in_ = X.shape[1]
        return self

    def score(self, X=None, y=None):
        check_is_fitted(self, "weight_")
        return -float(self.weight_)
