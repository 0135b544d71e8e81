import pytest

from floerbox.cfk import LspaceSpec, build_lspace_model, build_thin_model

COMPANIONS = {
    "unknot": build_thin_model(0),
    "rht": build_thin_model(1),
    "lht": build_thin_model(-1),
    "figure_eight": build_thin_model(0, {0: 1}),
    "thin_g2": build_thin_model(0, {1: 1, -1: 1}),
    "T25": build_lspace_model(LspaceSpec(1, (2, 1))),
    "T34": build_lspace_model(LspaceSpec(1, (3, 2))),
}

EXTRA = {
    "T27": build_lspace_model(LspaceSpec(1, (3, 2, 1))),
    "mirror_T25": build_lspace_model(LspaceSpec(-1, (2, 1))),
    "thin_tau2": build_thin_model(2, {0: 1, 1: 1, -1: 1}),
    "thin_taum1_sq": build_thin_model(-1, {0: 2}),
}


@pytest.fixture(params=sorted(COMPANIONS))
def companion(request):
    return COMPANIONS[request.param]


@pytest.fixture(scope="session")
def models_dir():
    from pathlib import Path
    return Path(__file__).resolve().parent.parent / "models"
