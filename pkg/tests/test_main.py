# pylint: disable=missing-docstring

import contextlib
import inspect
import io
import json
import pathlib
import unittest
from typing import Any, Dict, List, Sequence, Tuple

import bezoutkit
import bezoutkit.common
import bezoutkit.main


def run(argv: Sequence[str]) -> Tuple[int, str, str]:
    stdout = io.StringIO()
    stderr = io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        exit_code = bezoutkit.main.main(prog="bezout-kit", argv=list(argv))
    return exit_code, stdout.getvalue(), stderr.getvalue()


def run_document(argv: Sequence[str]) -> Tuple[int, Dict[str, Any]]:
    exit_code, stdout, _ = run(argv)
    return exit_code, json.loads(stdout)


def run_invalid(argv: Sequence[str]) -> Tuple[int, Dict[str, Any], str]:
    """Run the arguments rejected by the parser, which exits through SystemExit."""
    stdout = io.StringIO()
    stderr = io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        try:
            bezoutkit.main.main(prog="bezout-kit", argv=list(argv))
        except SystemExit as exception:
            code = exception.code
        else:
            raise AssertionError(f"Expected the parser to exit on: {argv}")
    assert isinstance(code, int)
    return code, json.loads(stdout.getvalue()), stderr.getvalue()


def results(document: Dict[str, Any]) -> List[str]:
    return [entry["result"] for entry in document["verification"]]


#: Commands covering every operation of the command line, with their exit codes
GOLDEN = [
    (["gcd", "--ring", "Z", "12", "18"], 0),
    (["gcd", "--ring", "H", "x", "6"], 0),
    (["classify", "--ring", "H", "x"], 0),
    (["factor", "--ring", "Z", "360"], 0),
    (["factor", "--ring", "Qx", "x^2 - 1", "x^2 + 2*x + 1"], 0),
    (["neat", "--ring", "H", "x"], 1),
    (["neat", "--ring", "Z", "12", "2", "3"], 0),
    (["adequate", "--ring", "Z", "360", "6"], 0),
    (["sr1", "--ring", "Z", "3", "5"], 1),
    (["sr2", "--ring", "H", "6 + x", "10", "15"], 0),
    (["quotient", "--ring", "Z", "12"], 0),
    (["snf", "--ring", "Z", "2,4;6,8"], 0),
    (["find", "--ring", "Qx", "local-quotient"], 0),
]  # type: List[Tuple[List[str], int]]


class TestGolden(unittest.TestCase):
    def test_exit_codes_and_verification(self) -> None:
        for argv, expected_exit_code in GOLDEN:
            exit_code, document = run_document(argv)
            self.assertEqual(expected_exit_code, exit_code, argv)
            self.assertEqual("bezout-kit/1", document["schema"])
            self.assertEqual(argv[0], document["operation"])
            self.assertNotIn("fail", results(document), argv)

            if expected_exit_code == 0:
                self.assertIsNone(document["error"], argv)
            else:
                self.assertEqual(
                    "mathematical-negative", document["error"]["category"], argv
                )

    def test_output_is_deterministic(self) -> None:
        for argv, _ in GOLDEN:
            self.assertEqual(run(argv), run(argv), argv)


class TestDocument(unittest.TestCase):
    def test_gcd(self) -> None:
        exit_code, document = run_document(["gcd", "--ring", "Z", "12", "18"])
        self.assertEqual(0, exit_code)
        self.assertEqual("Z", document["ring"])
        self.assertIsNone(document["precision"])
        self.assertEqual(0, document["seed"])
        self.assertEqual({"elements": ["12", "18"]}, document["inputs"])
        self.assertEqual("6", document["outputs"]["g"])
        self.assertEqual(["pass"] * len(document["verification"]), results(document))

    def test_precision_is_reported_over_series(self) -> None:
        _, document = run_document(
            ["gcd", "--ring", "H", "--precision", "12", "x", "6"]
        )
        self.assertEqual(12, document["precision"])
        self.assertEqual("6", document["outputs"]["g"])

    def test_factor(self) -> None:
        _, document = run_document(["factor", "--ring", "Z", "360"])
        self.assertEqual(["8", "9", "5"], document["outputs"]["factors"])

    def test_neat_witness(self) -> None:
        _, document = run_document(["neat", "--ring", "H", "x"])
        self.assertEqual("NotNeat", document["error"]["type"])
        self.assertEqual(["3", "5"], document["error"]["witness"])

    def test_sr1_decision(self) -> None:
        _, document = run_document(["sr1", "--ring", "Z", "3", "5"])
        self.assertIsNone(document["outputs"]["t"])
        self.assertEqual(
            "a is congruent to neither 1 nor -1 modulo b",
            document["outputs"]["decision"],
        )

    def test_snf(self) -> None:
        _, document = run_document(["snf", "--ring", "Z", "2,4;6,8"])
        self.assertEqual(["2", "4"], document["outputs"]["diagonal"])
        self.assertEqual(["2", "8"], document["outputs"]["determinantal_divisors"])
        self.assertIsNone(document["outputs"]["verified_precision"])

    def test_classify_radical_element(self) -> None:
        exit_code, document = run_document(["classify", "--ring", "H", "x"])
        self.assertEqual(0, exit_code)
        outputs = document["outputs"]
        self.assertTrue(outputs["pseudo_irreducible"])
        self.assertFalse(outputs["neat"])
        self.assertEqual(["3", "5"], outputs["neat_witness"])
        self.assertFalse(outputs["adequate"])
        self.assertFalse(outputs["almost_sr1"])
        self.assertFalse(outputs["almost_sr1_enumerated"])

    def test_classify_marks_enumerated_quotients(self) -> None:
        for text, enumerated in (("12", True), ("257", False)):
            exit_code, document = run_document(["classify", "--ring", "Z", text])
            self.assertEqual(0, exit_code, text)
            self.assertTrue(document["outputs"]["almost_sr1"], text)
            self.assertEqual(
                enumerated, document["outputs"]["almost_sr1_enumerated"], text
            )

    def test_snf_over_series(self) -> None:
        exit_code, document = run_document(["snf", "--ring", "H", "x,0;2,3"])
        self.assertEqual(0, exit_code)
        self.assertEqual(["1", "3*x"], document["outputs"]["diagonal"])
        self.assertEqual(["pass"] * len(document["verification"]), results(document))

    def test_find(self) -> None:
        _, document = run_document(["find", "--ring", "Qx", "local-quotient"])
        self.assertEqual({"kind": "local-quotient"}, document["inputs"])
        self.assertEqual("x", document["outputs"]["element"])


class TestErrors(unittest.TestCase):
    def test_parse_error(self) -> None:
        exit_code, stdout, stderr = run(["gcd", "--ring", "Z", "2 +", "3"])
        self.assertEqual(2, exit_code)
        document = json.loads(stdout)
        self.assertEqual("usage", document["error"]["category"])
        self.assertEqual("ParseError", document["error"]["type"])
        self.assertEqual(3, document["error"]["position"])
        self.assertTrue(stderr.startswith("ParseError: "))

    def test_zero_denominator(self) -> None:
        exit_code, document = run_document(["gcd", "--ring", "Qx", "1/0", "x"])
        self.assertEqual(2, exit_code)
        self.assertEqual("ZeroDenominator", document["error"]["type"])

    def test_zero_element(self) -> None:
        for argv in (
            ["classify", "--ring", "Z", "0"],
            ["factor", "--ring", "H", "0"],
        ):
            exit_code, document = run_document(argv)
            self.assertEqual(2, exit_code, argv)
            self.assertEqual("usage", document["error"]["category"], argv)
            self.assertEqual("ZeroElement", document["error"]["type"], argv)

    def test_factor_bound(self) -> None:
        exit_code, document = run_document(
            ["factor", "--ring", "Z", "--factor-bound", "100", "1022117"]
        )
        self.assertEqual(3, exit_code)
        self.assertEqual("resource-bound", document["error"]["category"])
        self.assertEqual("FactorizationBoundExceeded", document["error"]["type"])

    def test_missing_ring(self) -> None:
        exit_code, document, stderr = run_invalid(["gcd", "1", "2"])
        self.assertEqual(2, exit_code)
        self.assertEqual("gcd", document["operation"])
        self.assertIsNone(document["ring"])
        self.assertEqual("usage", document["error"]["category"])
        self.assertEqual("InvalidArguments", document["error"]["type"])
        self.assertIn("--ring", document["error"]["message"])
        self.assertIn("usage:", stderr)

    def test_wrong_number_of_elements(self) -> None:
        exit_code, document, _ = run_invalid(["sr2", "--ring", "Z", "1", "2"])
        self.assertEqual(2, exit_code)
        self.assertEqual("sr2", document["operation"])
        self.assertEqual("InvalidArguments", document["error"]["type"])
        self.assertIsNone(document["outputs"])

    def test_missing_command(self) -> None:
        exit_code, document, _ = run_invalid([])
        self.assertEqual(2, exit_code)
        self.assertIsNone(document["operation"])
        self.assertEqual("InvalidArguments", document["error"]["type"])


class TestReadme(unittest.TestCase):
    def certificate_section(self) -> str:
        readme = pathlib.Path(__file__).parent.parent / "README.rst"
        text = readme.read_text(encoding="utf-8")
        start = text.index("Certificate document\n")
        end = text.index("\nLibrary\n", start)
        return text[start:end]

    def test_document_fields_are_documented(self) -> None:
        section = self.certificate_section()
        _, document = run_document(["gcd", "--ring", "Z", "12", "18"])
        for key in document:
            self.assertIn(f"``{key}``\n", section, key)
        for key in ("category", "type", "message", "witness", "position"):
            self.assertIn(f"``{key}``", section, key)
        self.assertIn("``verified_precision``", section)

    def test_error_types_are_documented(self) -> None:
        section = self.certificate_section()
        error_types = [
            name
            for name, value in inspect.getmembers(bezoutkit.common, inspect.isclass)
            if issubclass(value, bezoutkit.common.Error)
            and value not in bezoutkit.common.Error.__subclasses__()
            and value is not bezoutkit.common.Error
        ] + ["NoReduction", "ViolationError"]
        for name in error_types:
            self.assertIn(f"``{name}``", section, name)

        for category in ("mathematical-negative", "usage", "resource-bound"):
            self.assertIn(f"``{category}``", section, category)


class TestVersion(unittest.TestCase):
    def test_version(self) -> None:
        exit_code, stdout, _ = run(["--version"])
        self.assertEqual(0, exit_code)
        self.assertEqual(bezoutkit.__version__, stdout.strip())


if __name__ == "__main__":
    unittest.main()
