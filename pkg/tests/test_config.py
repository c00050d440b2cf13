import json

import pytest

from dbcompare.config import CatalogOverrides, RunConfig, build_instances


def test_runconfig_defaults():
    cfg = RunConfig()
    assert cfg.delta == 128 and cfg.sigma == 128
    assert cfg.protocols is None


def test_runconfig_parse(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("""
delta = 64          # smaller nonces
sigma = 256
memory_tolerance_bits = 2048
protocols = BC, SKI
port = 9000
output_dir = /tmp/out
""")
    cfg = RunConfig.load(path)
    assert cfg.delta == 64 and cfg.sigma == 256
    assert cfg.memory_tolerance_bits == 2048
    assert cfg.protocols == ["BC", "SKI"]
    assert cfg.port == 9000


def test_runconfig_rejects_unknown_keys(tmp_path):
    path = tmp_path / "bad.conf"
    path.write_text("colour = blue\n")
    with pytest.raises(ValueError, match="unknown key"):
        RunConfig.load(path)


def test_runconfig_rejects_unknown_protocols(tmp_path):
    path = tmp_path / "bad.conf"
    path.write_text("protocols = BC, Nonsense\n")
    with pytest.raises(ValueError, match="unknown protocols"):
        RunConfig.load(path)


def test_runconfig_validation(tmp_path):
    path = tmp_path / "bad.conf"
    path.write_text("delta = 0\n")
    with pytest.raises(ValueError, match="positive"):
        RunConfig.load(path)


def test_catalog_overrides(tmp_path):
    doc = {
        "constants": {"delta": 64},
        "protocols": {
            "MP": {"b": False},
            "HK": {"memory": {"n": 3, "delta": 2, "sigma": 0, "const": 7}},
        },
    }
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(doc))
    cfg = RunConfig(catalog=str(path), protocols=["MP", "HK"])
    instances = build_instances(cfg)
    mp = next(i for i in instances if i.protocol == "MP")
    hk = next(i for i in instances if i.id == "HK-{10}")
    assert mp.vector.b is False
    assert hk.vector.m == 3 * 10 + 2 * 64 + 7


def test_catalog_overrides_reject_unknown(tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps({"protocols": {"ZZ": {}}}))
    with pytest.raises(ValueError, match="unknown protocol"):
        CatalogOverrides.load(path)
    path.write_text(json.dumps({"protocols": {"BC": {"zap": 1}}}))
    with pytest.raises(ValueError, match="unknown fields"):
        CatalogOverrides.load(path)
    path.write_text(json.dumps({"zz": 1}))
    with pytest.raises(ValueError, match="unknown keys"):
        CatalogOverrides.load(path)
