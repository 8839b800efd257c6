#!/usr/bin/env python3

"""Check that the distribution and bezoutkit/__init__.py are in sync."""
import os
import pathlib
import subprocess
import sys
from typing import List, Optional

import bezoutkit

#: Map of the development status classifiers to the ``__status__`` in __init__.py
STATUS_MAP = {
    f"Development Status :: {index} - {status}": status
    for index, status in enumerate(
        [
            "Planning",
            "Pre-Alpha",
            "Alpha",
            "Beta",
            "Production/Stable",
            "Mature",
            "Inactive",
        ],
        start=1,
    )
}


def query_setup_py(setup_py_pth: pathlib.Path, field: str) -> str:
    """Retrieve the ``field`` of the distribution metadata as reported by setup.py."""
    return subprocess.check_output(
        [sys.executable, str(setup_py_pth), f"--{field}"], encoding="utf-8"
    ).strip()


def main() -> int:
    """Execute the main routine."""
    repo_root = pathlib.Path(os.path.realpath(__file__)).parent.parent

    setup_py_pth = repo_root / "setup.py"
    if not setup_py_pth.exists():
        raise RuntimeError(f"Could not find the setup.py: {setup_py_pth}")

    errors = []  # type: List[str]

    expected_in_init = {
        "version": bezoutkit.__version__,
        "author": bezoutkit.__author__,
        "license": bezoutkit.__license__,
        "description": bezoutkit.__doc__,
    }

    for field, in_init in expected_in_init.items():
        in_setup = query_setup_py(setup_py_pth, field)
        if in_setup != in_init:
            errors.append(
                f"The {field} in the setup.py is {in_setup!r}, "
                f"while the {field} in bezoutkit/__init__.py is {in_init!r}"
            )

    status_classifier = None  # type: Optional[str]
    for classifier in query_setup_py(setup_py_pth, "classifiers").splitlines():
        if classifier in STATUS_MAP:
            status_classifier = classifier
            break

    if status_classifier is None:
        errors.append(
            "Expected a status classifier in setup.py "
            "(e.g., 'Development Status :: 3 - Alpha'), but found none"
        )
    elif STATUS_MAP[status_classifier] != bezoutkit.__status__:
        errors.append(
            f"Expected the status {STATUS_MAP[status_classifier]!r} "
            f"according to setup.py in bezoutkit/__init__.py, "
            f"but found: {bezoutkit.__status__!r}"
        )

    for error in errors:
        print(error, file=sys.stderr)

    return 0 if not errors else -1


if __name__ == "__main__":
    sys.exit(main())
