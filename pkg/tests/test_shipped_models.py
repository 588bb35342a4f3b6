"""The JSON files under models/ stay in sync with the scenario builders."""

from pathlib import Path

import pytest

from opdep.modelio import load_model
from opdep.scenarios import (
    build_counterexample,
    build_example42,
    build_example42_continuous,
    build_example43,
    example42_head_models,
    example42_tail_interleaved,
)

MODELS = Path(__file__).resolve().parent.parent / "models"


def expected_models():
    ce = build_counterexample()
    pair = build_example42()
    inter = build_example42(tail=example42_tail_interleaved())
    cont = build_example42_continuous()
    heads = example42_head_models()
    p43 = build_example43()
    return {
        "counterexample_f.json": ce.f,
        "counterexample_f_star.json": ce.f_star,
        "counterexample_h.json": ce.h,
        "counterexample_h_star.json": ce.h_star,
        "example42_law.json": pair.law,
        "example42_law_star.json": pair.law_star,
        "example42_interleaved_law.json": inter.law,
        "example42_interleaved_law_star.json": inter.law_star,
        "example42_continuous.json": cont.model,
        "example42_continuous_star.json": cont.model_star,
        "example42_head.json": heads.model,
        "example42_head_star.json": heads.model_star,
        "example43_law.json": p43.law,
        "example43_law_star.json": p43.law_star,
    }


@pytest.mark.parametrize("name", sorted(expected_models()))
def test_shipped_model_matches_builder(name):
    assert load_model(MODELS / name) == expected_models()[name]


def test_no_stray_model_files():
    assert {p.name for p in MODELS.glob("*.json")} == set(expected_models())
