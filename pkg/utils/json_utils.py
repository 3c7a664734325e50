import json


def dumps_canonical(data):
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def save_json(path, data):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_canonical(data))
