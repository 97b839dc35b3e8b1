from __future__ import annotations

from collections.abc import Mapping


def merge_dicts_recursively(*dicts: Mapping) -> dict:
    """
    Creates a dict whose keyset is the union of all the
    input dictionaries.  dicts later in the list have higher
    priority, and nested mappings are merged key by key
    rather than replaced wholesale.
    """
    result: dict = dict()
    for d in dicts:
        for key, value in d.items():
            current = result.get(key)
            if isinstance(current, Mapping) and isinstance(value, Mapping):
                result[key] = merge_dicts_recursively(current, value)
            else:
                result[key] = value
    return result
