import json
import math

import numpy as np
import pytest

from szegolab import serialize
from szegolab.circle import make_grid
from szegolab.muckenhoupt import Verdict, ap_scan
from szegolab.norms import BlowupReport


def test_fmt_round_trips():
    for x in (1 / 3, math.pi, 1e-300, -2.5e17):
        assert float(serialize.fmt(x)) == x


def test_to_json_deterministic_and_parseable():
    obj = {"b": 1 / 3, "a": [True, None, Verdict.INSIDE], "n": np.int64(3), "inf": math.inf}
    text = serialize.to_json(obj)
    assert text == serialize.to_json(obj)
    back = json.loads(text)
    assert back["b"] == 1 / 3 and back["a"] == [True, None, "Inside"] and back["inf"] == "inf"
    assert list(back) == ["b", "a", "n", "inf"]


def test_to_json_rejects_unknown():
    with pytest.raises(TypeError):
        serialize.to_json(object())


def test_samples_csv_round_trip():
    g = make_grid(16)
    f = g.samples(lambda t: np.exp(1j * t) / 3)
    back = serialize.samples_from_csv(serialize.samples_to_csv(f))
    assert np.array_equal(back.values, f.values)


def test_samples_csv_validates_nodes():
    text = "theta,re,im\n0,1,0\n1,1,0\n"
    with pytest.raises(ValueError):
        serialize.samples_from_csv(text)
    with pytest.raises(ValueError):
        serialize.samples_from_csv("x,y\n1,2\n")


def test_scan_csv_footer():
    text = serialize.scan_report_to_csv(ap_scan(0.5, 6))
    footer = serialize.read_footer(text)
    assert footer["predicted_slope"] == -1 and footer["verdict"] == "Outside" and footer["pass"] is True
    assert text.splitlines()[0] == "delta,quotient"


def test_blowup_table_json():
    r = BlowupReport(0.5, 3.0, [512, 1024, 2048, 4096], [1.0, 1.01, 1.02, 1.03])
    d = json.loads(serialize.blowup_report_table(r).to_json())
    assert d["verdict"] == "Stable" and d["rows"][0] == {"n_points": 512, "lower_bound": 1.0}


def test_table_meta_only_csv():
    t = serialize.Table(meta={"x": 0.5, "ok": True, "v": [1, 2]})
    assert t.to_csv() == 'key,value\nx,0.5\nok,true\nv,"[1, 2]"\n'
    with pytest.raises(ValueError):
        t.render("xml")


def test_projection_table():
    t = serialize.projection_table([0.5], [-2.0 + 0j])
    assert t.to_csv() == "re_z,im_z,re_val,im_val\n0.5,0,-2,0\n"
