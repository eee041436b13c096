import json
import os
import pathlib

import pytest

SCHEMAS = pathlib.Path(os.environ.get("COLORIDEALS_SCHEMAS", pathlib.Path(__file__).parents[2] / "schemas"))


@pytest.fixture(scope="session")
def validator():
    from jsonschema import Draft202012Validator
    from referencing import Registry, Resource

    docs = {p.name: json.loads(p.read_text()) for p in SCHEMAS.glob("*.schema.json")}
    registry = Registry().with_resources((d["$id"], Resource.from_contents(d)) for d in docs.values())

    def validate(doc, name):
        Draft202012Validator(docs[name], registry=registry).validate(doc)

    return validate


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("COLORIDEALS_CLI")
    if not path:
        pytest.skip("COLORIDEALS_CLI not set")
    return path
