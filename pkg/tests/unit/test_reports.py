"""
Tests for report models and the deterministic writers.
"""

import json
from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from circle_rectification.bundles.bundle import bundle_from_AB
from circle_rectification.bundles.rectifier import RectificationReport
from circle_rectification.geometry.curves import Circle, Line
from circle_rectification.geometry.spheres import SphereEq, sphere_equal
from circle_rectification.metrics.connection import CurvatureSurvey
from circle_rectification.nets.sphere_net import GeometryClass, canonical_net
from circle_rectification.processors.beltrami_checker import BeltramiReport
from circle_rectification.reports import (
    BeltramiReportModel,
    BundleModel,
    ClassificationModel,
    CurvatureReportModel,
    DiagnosticModel,
    DirsModel,
    NetModel,
    PolynomialModel,
    RectificationReportModel,
    SphereModel,
    TaylorReportModel,
    dump_json,
    read_model,
    write_csv,
    write_json,
)
from circle_rectification.taylor.polynomials import BivarPoly
from circle_rectification.utils.exceptions import InvalidNetError

K = BivarPoly.k()
M = BivarPoly.m()


class TestDomainModels:
    """Test conversion between models and domain objects."""

    def test_sphere(self):
        sphere = SphereEq(1.0, (0.0, -2.0, 0.0), 0.75)
        model = SphereModel.from_domain(sphere)
        assert model.b == [0.0, -2.0, 0.0]
        assert model.to_domain() == sphere

    def test_sphere_needs_three_components(self):
        with pytest.raises(ValidationError):
            SphereModel(a=1.0, b=[0.0, 0.0], c=0.0)

    def test_bundle(self):
        bundle = bundle_from_AB(BivarPoly.constant(1), BivarPoly(), [(0.5, -1.0), (0.0, 0.0), (2.0, 1.0)])
        model = BundleModel.from_domain(bundle)
        restored = model.to_domain()

        assert len(restored) == 3
        assert restored.tangents == bundle.tangents
        for original, curve in zip(bundle.curves, restored.curves):
            assert type(curve) is type(original)
            np.testing.assert_allclose(curve.center, original.center, atol=1e-15)
            assert curve.radius == pytest.approx(original.radius)

    def test_bundle_of_lines_uses_line_kind(self):
        bundle = bundle_from_AB(BivarPoly(), BivarPoly(), [(1.0, 1.0)])
        payload = json.loads(dump_json(BundleModel.from_domain(bundle)))
        assert payload["members"][0]["curve"]["kind"] == "line"
        assert isinstance(BundleModel.model_validate(payload).to_domain().curves[0], Line)

    def test_bundle_circle_kind(self):
        bundle = bundle_from_AB(BivarPoly.constant(1), BivarPoly(), [(0.0, 0.0)])
        payload = json.loads(dump_json(BundleModel.from_domain(bundle)))
        assert payload["members"][0]["curve"]["kind"] == "circle"
        assert isinstance(BundleModel.model_validate(payload).to_domain().curves[0], Circle)

    def test_circle_radius_must_be_positive(self):
        payload = {"center": [0, 0, 0], "members": [
            {"k": 0, "m": 0, "curve": {"kind": "circle", "center": [0, 1, 0],
                                       "radius": 0.0, "normal": [0, 0, 1]}}]}
        with pytest.raises(ValidationError):
            BundleModel.model_validate(payload)

    def test_polynomial_is_exact(self):
        poly = Fraction(1, 3) * K * K * M - 7
        model = PolynomialModel.from_domain(poly)
        assert model.to_domain() == poly
        restored = PolynomialModel.model_validate_json(dump_json(model)).to_domain()
        assert restored == poly

    def test_polynomial_merges_repeated_terms(self):
        model = PolynomialModel(terms=[{"i": 1, "j": 0, "num": 1, "den": 2},
                                       {"i": 1, "j": 0, "num": 1, "den": 2}])
        assert model.to_domain() == K

    def test_polynomial_rejects_zero_denominator(self):
        with pytest.raises(ValidationError):
            PolynomialModel(terms=[{"i": 0, "j": 0, "num": 1, "den": 0}])

    def test_net(self):
        net = canonical_net(GeometryClass.HYPERBOLIC)
        restored = NetModel.from_domain(net).to_domain()
        for original, sphere in zip(net.basis, restored.basis):
            assert sphere_equal(original, sphere)

    def test_net_needs_four_spheres(self):
        spheres = NetModel.from_domain(canonical_net(GeometryClass.EUCLIDEAN)).spheres[:3]
        with pytest.raises(ValidationError):
            NetModel(spheres=spheres)

    def test_dependent_net_rejected_by_domain(self):
        sphere = SphereModel(a=1.0, b=[0.0, 0.0, 0.0], c=-1.0)
        with pytest.raises(InvalidNetError):
            NetModel(spheres=[sphere] * 4).to_domain()

    def test_dirs(self):
        model = DirsModel.model_validate_json('{"dirs": [[0.5, -1], [2, 3]]}')
        assert model.dirs == [(0.5, -1.0), (2.0, 3.0)]


class TestReportModels:
    """Test the report envelopes."""

    def test_rectification_report(self):
        report = RectificationReport((0.0, 1.0, 0.0), [1e-12, 3e-12], 3e-12, 1e-7)
        model = RectificationReportModel.from_domain(report, seed=9, tolerances={"tol": 1e-7})
        payload = json.loads(dump_json(model))

        assert payload["version"] == 1
        assert payload["seed"] == 9
        assert payload["tolerances"] == {"tol": 1e-7}
        assert payload["second_point"] == [0.0, 1.0, 0.0]
        assert payload["residuals"] == [1e-12, 3e-12]
        assert payload["rectified"] is True

    def test_rectification_report_without_point(self):
        report = RectificationReport(None, [], 0.0, 1e-7)
        model = RectificationReportModel.from_domain(report, seed=0, tolerances={})
        assert model.second_point is None
        assert model.rectified is False

    def test_classification_uses_class_alias(self):
        model = ClassificationModel(seed=0, **{"class": "elliptic"},
                                    S0=SphereModel(a=1.0, b=[0, 0, 0], c=1.0), disc=-4.0)
        payload = json.loads(dump_json(model))
        assert payload["class"] == "elliptic"
        assert "geometry_class" not in payload
        assert ClassificationModel.model_validate(payload).geometry_class == "elliptic"

    def test_curvature_report(self):
        survey = CurvatureSurvey("klein", [((0.1, 0.0, 0.0), -1.0), ((0.0, 0.2, 0.0), -1.0)])
        model = CurvatureReportModel.from_domain(survey, seed=3, tolerances={"curvature": 1e-3})
        assert model.mean == -1.0
        assert model.stddev == 0.0
        assert model.samples[1].x == [0.0, 0.2, 0.0]

    def test_taylor_report_without_numeric_comparison(self):
        closed = DiagnosticModel(
            source="closed", grid_size=60, fit_residuals={"phi2": 0.0}, remainders={"phi2": 0.0},
            linear_coefficients={"alpha": 1.0}, recovered=[1.0, 0.0, 0.0], violations=[],
            divisibility={"phi2": True}, verdict="Rectifiable",
        )
        model = TaylorReportModel(
            seed=0, A=PolynomialModel.from_domain(BivarPoly.constant(1)),
            B=PolynomialModel.from_domain(BivarPoly.constant(0)), identities={"mixed": True},
            degrees={"phi2": 2}, divisibility={}, symmetry_violations=[], closed=closed,
            verdict="Rectifiable",
        )
        payload = json.loads(dump_json(model))
        assert payload["closed_vs_numeric"] is None
        assert payload["numeric"] is None

    def test_beltrami_report(self):
        report = BeltramiReport(
            metric="euclidean", seed=4, expected_curvature=0.0,
            circle_rms=[1e-9, 2e-9], line_residuals=[0.0, 0.0], net_residuals=[0.0, 0.0],
            energy_drifts=[1e-12, 1e-12],
            tolerances={"circle_rms": 1e-6, "image_line": 1e-6, "energy_drift": 1e-8, "curvature": 1e-3},
        )
        model = BeltramiReportModel.from_domain(report)
        assert model.geodesics == 2
        assert model.max_circle_rms == 2e-9
        assert model.curvature_mean is None
        assert model.failures == []
        assert model.passed


class TestWriters:
    """Test deterministic JSON and CSV output."""

    def test_dump_json_is_deterministic(self):
        report = RectificationReport((0.1, 0.2, 0.3), [0.1 + 0.2], 0.1 + 0.2, 1.0)
        first = dump_json(RectificationReportModel.from_domain(report, 5, {"tol": 1.0, "b": 2.0}))
        second = dump_json(RectificationReportModel.from_domain(report, 5, {"b": 2.0, "tol": 1.0}))
        assert first == second
        assert first.endswith("\n")
        assert "0.30000000000000004" in first

    def test_dump_json_writes_null_for_nan(self):
        report = RectificationReport((0.0, 1.0, 0.0), [float("nan"), 1e-12], float("nan"), 1e-7)
        text = dump_json(RectificationReportModel.from_domain(report, 0, {}))
        payload = json.loads(text)
        assert "NaN" not in text
        assert payload["residuals"] == [None, 1e-12]
        assert payload["max_residual"] is None

    def test_dump_json_sorts_keys(self):
        payload = json.loads(dump_json(DirsModel(dirs=[(1.0, 2.0)])))
        text = dump_json(ClassificationModel(seed=0, **{"class": "euclidean"},
                                             S0=SphereModel(a=0.0, b=[0, 0, 0], c=1.0), disc=0.0))
        keys = [line.split('"')[1] for line in text.splitlines() if line.startswith('  "')]
        assert keys == sorted(keys)
        assert payload == {"dirs": [[1.0, 2.0]]}

    def test_write_and_read_json(self, tmp_path):
        path = tmp_path / "dirs.json"
        model = DirsModel(dirs=[(0.25, -0.5)])
        text = write_json(model, str(path))
        assert path.read_text(encoding="utf-8") == text
        assert read_model(DirsModel, str(path)) == model

    def test_write_json_without_path(self, tmp_path):
        assert write_json(DirsModel(dirs=[]), None) == dump_json(DirsModel(dirs=[]))
        assert list(tmp_path.iterdir()) == []

    def test_read_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"dirs": "nope"}', encoding="utf-8")
        with pytest.raises(ValidationError):
            read_model(DirsModel, str(path))

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            read_model(DirsModel, str(tmp_path / "missing.json"))

    def test_write_csv(self, tmp_path):
        path = tmp_path / "points.csv"
        count = write_csv(str(path), ["x", "y"], [(0.1, 1.0), (1 / 3, -2.0)])
        assert count == 2
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines == [
            "x,y",
            "0.10000000000000001,1",
            "0.33333333333333331,-2",
        ]
