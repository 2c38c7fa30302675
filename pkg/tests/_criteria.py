"""Registry tying acceptance tests to the pass/fail lines printed after a run.

Each acceptance test registers itself under a stable number at import time,
so the terminal summary can report every criterion even when one of them
never executed (collection error, deselection).
"""

import functools

# number -> [description, outcome]; outcome is "pass", "fail", or "not run"
RESULTS: dict[int, list[str]] = {}


def criterion(number: int, description: str):
    """Mark a test as acceptance criterion ``number``.

    The wrapped test records its outcome in RESULTS; failures propagate
    unchanged so pytest still reports them the normal way.
    """
    RESULTS[number] = [description, "not run"]

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                RESULTS[number][1] = "fail"
                raise
            RESULTS[number][1] = "pass"
            return result

        return wrapper

    return deco
