"""Figure dataset generation: determinism, formats, qualitative shapes."""

import io

import numpy as np
import pytest

from qcoherent.figures import emit_figure, figure_dataset, figure_spec, render_csv


def load_csv(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    header = raw.split(b"\n", 1)[0].decode().split(",")
    data = np.genfromtxt(io.BytesIO(raw), delimiter=",", skip_header=1)
    return header, data, raw


class TestSpecs:
    def test_defaults(self):
        spec = figure_spec(2)
        assert spec.q_list == (1.0, 0.9, 0.8, 0.7)
        assert spec.x_range == (0.0, 5.0, 201)

    def test_figure_one_integer_grid(self):
        spec = figure_spec(1)
        assert spec.q_list == (0.98, 0.96, 0.94)
        assert spec.x_range[2] == int(spec.x_range[1]) + 1

    def test_overrides(self):
        spec = figure_spec(6, q_list=(0.5,), points=11, x_max=2.0)
        assert spec.q_list == (0.5,)
        assert spec.x_range == (0.0, 2.0, 11)

    def test_unknown_figure(self):
        with pytest.raises(ValueError):
            figure_spec(12)


class TestDeterminism:
    @pytest.mark.parametrize("figure_id", range(1, 10))
    def test_byte_identical_reruns(self, figure_id, tmp_path):
        # keep reruns cheap with a small grid; format must still be identical
        kwargs = {} if figure_id == 1 else {"points": 41}
        p1 = tmp_path / "a.csv"
        p2 = tmp_path / "b.csv"
        emit_figure(figure_id, str(p1), **kwargs)
        emit_figure(figure_id, str(p2), **kwargs)
        assert p1.read_bytes() == p2.read_bytes()

    def test_lf_endings_and_format(self, tmp_path):
        path = tmp_path / "f2.csv"
        emit_figure(2, str(path), points=5)
        raw = path.read_bytes()
        assert b"\r" not in raw
        body = raw.decode().strip().split("\n")
        assert body[0] == "x,norm[q=1],norm[q=0.9],norm[q=0.8],norm[q=0.7]"
        # 17 significant digits in scientific notation
        first_value = body[1].split(",")[1]
        mantissa = first_value.split("e")[0]
        assert len(mantissa.replace("-", "").replace(".", "")) == 17


class TestShapes:
    def test_figure1_enhancement_at_least_one(self, tmp_path):
        path = tmp_path / "f1.csv"
        emit_figure(1, str(path))
        _, data, _ = load_csv(path)
        assert np.all(data[:, 1:] >= 1.0)
        # stronger deformation (smaller q) dominates
        assert np.all(data[1:, 3] >= data[1:, 1])

    def test_figure2_normalization_below_exp(self, tmp_path):
        path = tmp_path / "f2.csv"
        emit_figure(2, str(path), points=41)
        header, data, _ = load_csv(path)
        assert header[1] == "norm[q=1]"
        np.testing.assert_allclose(data[:, 1], np.exp(data[:, 0]), rtol=1e-12)
        assert np.all(data[1:, 2:] < data[1:, [1]])

    def test_figure6_mandel_signs(self, tmp_path):
        path = tmp_path / "f6.csv"
        emit_figure(6, str(path), points=41)
        _, data, _ = load_csv(path)
        assert np.all(data[:, 1] == 0.0)  # classical column
        assert np.all(data[1:, 2:] < 0.0)

    def test_figure7_squeezing_below_one(self, tmp_path):
        path = tmp_path / "f7.csv"
        emit_figure(7, str(path), points=41)
        _, data, _ = load_csv(path)
        assert np.all(data[:, 1] == 1.0)
        assert np.all(data[1:, 2:] < 1.0)

    def test_figure8_ordering(self, tmp_path):
        path = tmp_path / "f8.csv"
        emit_figure(8, str(path), points=41)
        header, data, _ = load_csv(path)
        assert header == ["x", "sigma[q=0.7]", "four_mean_n", "yuen_bound", "sigma_b[q=0.7]"]
        sigma, lower, upper, sigma_b = data[:, 1], data[:, 2], data[:, 3], data[:, 4]
        assert np.all(lower <= sigma + 1e-10)
        assert np.all(sigma <= upper + 1e-10)
        assert np.all(sigma_b <= lower + 1e-10)

    def test_figure9_no_deformed_squeezing(self, tmp_path):
        path = tmp_path / "f9.csv"
        emit_figure(9, str(path), points=41)
        _, data, _ = load_csv(path)
        assert np.all(data[:, 1] == 1.0)
        assert np.all(data[1:, 2:] > 1.0)


class TestRenderCsv:
    def test_round_trip_exact(self):
        headers, data = figure_dataset(figure_spec(3, points=7))
        text = render_csv(headers, data)
        parsed = np.genfromtxt(io.StringIO(text), delimiter=",", skip_header=1)
        np.testing.assert_array_equal(parsed, data)
