#!/usr/bin/env python3

"""Run pre-commit checks on the repository."""
import argparse
import enum
import os
import pathlib
import shlex
import subprocess
import sys
from typing import List, Mapping, Optional, Sequence

#: Packages checked by the type checker and the linter
PACKAGES = ["bezoutkit", "tests", "continuous_integration"]


class Step(enum.Enum):
    """Enumerate different pre-commit steps."""

    REFORMAT = "reformat"
    MYPY = "mypy"
    PYLINT = "pylint"
    TEST = "test"
    DOCTEST = "doctest"
    CHECK_INIT_AND_SETUP_COINCIDE = "check-init-and-setup-coincide"


def run(
    cmd: Sequence[str],
    cwd: pathlib.Path,
    env: Optional[Mapping[str, str]] = None,
) -> bool:
    """Run the command and report it to STDERR if it failed."""
    cmd_str = " ".join(shlex.quote(part) for part in cmd)
    print(f"Executing from {cwd}: {cmd_str}")

    exit_code = subprocess.call(cmd, cwd=str(cwd), env=env)
    if exit_code != 0:
        print(f"Failed with exit code {exit_code}: {cmd_str}", file=sys.stderr)

    return exit_code == 0


def doctest_targets(repo_root: pathlib.Path) -> List[pathlib.Path]:
    """List the README and every module of the package which contains a doctest."""
    modules = sorted(
        pth
        for pth in (repo_root / "bezoutkit").glob("*.py")
        if ">>>" in pth.read_text(encoding="utf-8")
    )
    return [repo_root / "README.rst"] + modules


def execute(step: Step, overwrite: bool, repo_root: pathlib.Path) -> bool:
    """Execute a single pre-commit step and tell whether it succeeded."""
    if step is Step.REFORMAT:
        check = [] if overwrite else ["--check"]
        return run(["black", *check, *PACKAGES, "setup.py"], cwd=repo_root)

    elif step is Step.MYPY:
        config = pathlib.Path("continuous_integration") / "mypy.ini"
        return run(
            ["mypy", "--strict", "--config-file", str(config), *PACKAGES],
            cwd=repo_root,
        )

    elif step is Step.PYLINT:
        return run(["pylint", *PACKAGES], cwd=repo_root)

    elif step is Step.TEST:
        env = dict(os.environ)
        env["ICONTRACT_SLOW"] = "true"
        if not run(
            ["coverage", "run", "--source", "bezoutkit", "-m", "unittest", "discover"],
            cwd=repo_root,
            env=env,
        ):
            return False

        # The report only informs; a low coverage does not fail the step.
        run(["coverage", "report"], cwd=repo_root)
        return True

    elif step is Step.DOCTEST:
        return all(
            run([sys.executable, "-m", "doctest", str(pth)], cwd=repo_root)
            for pth in doctest_targets(repo_root)
        )

    elif step is Step.CHECK_INIT_AND_SETUP_COINCIDE:
        return run(
            [sys.executable, "continuous_integration/check_init_and_setup_coincide.py"],
            cwd=repo_root,
        )

    else:
        raise AssertionError(f"Unhandled step: {step}")


def main() -> int:
    """Execute the main routine."""
    step_values = [step.value for step in Step]

    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--overwrite",
        help="Try to automatically fix the offending files (e.g., by re-formatting).",
        action="store_true",
    )
    parser.add_argument(
        "--select",
        help=f"If set, only the selected steps are executed: {', '.join(step_values)}",
        nargs="+",
        choices=step_values,
        default=step_values,
    )
    parser.add_argument(
        "--skip",
        help="If set, the given steps are skipped",
        nargs="+",
        choices=step_values,
        default=[],
    )
    args = parser.parse_args()

    repo_root = pathlib.Path(os.path.realpath(__file__)).parent.parent

    steps = [
        step
        for step in Step
        if step.value in args.select and step.value not in args.skip
    ]
    for step in steps:
        print(f"Running {step.value}...")
        if not execute(step, overwrite=args.overwrite, repo_root=repo_root):
            return 1

    return 0


if __name__ == "__main__":
    sys.exit(main())
