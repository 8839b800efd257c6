"""Compute certified gcds, factorizations and normal forms over ℤ, ℚ[x] and H."""
import argparse
import json
import random
import sys
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Mapping,
    NoReturn,
    Optional,
    Sequence,
    Tuple,
)

import icontract
from typing_extensions import TypeAlias

import bezoutkit
from bezoutkit import classifier, kernel, matrices
from bezoutkit.common import (
    Error,
    InvalidArguments,
    MathematicalNegative,
    NotAdequate,
    NotNeat,
    PrecisionFlagInvalid,
    ResourceBound,
    UnsupportedRing,
    UsageError,
    ZeroElement,
    assert_never,
)
from bezoutkit.exact import DEFAULT_FACTOR_BOUND
from bezoutkit.henriksen import DEFAULT_PRECISION, HenriksenRing, canonical_class
from bezoutkit.integers import IntegerRing
from bezoutkit.kernel import Ring
from bezoutkit.polynomials import PolynomialRing

assert bezoutkit.__doc__ == __doc__

#: Version of the layout of the certificate documents
SCHEMA_VERSION = "bezout-kit/1"

#: Number of the sampled pairs checked by ``classify``
SAMPLE_COUNT = 3

Verification: TypeAlias = List[Tuple[str, bool]]


class Context:
    """Bundle the parsed command-line settings shared by the commands."""

    def __init__(
        self,
        ring: Ring[Any],
        rng: random.Random,
        factor_bound: int,
        verbose: bool,
    ) -> None:
        """Initialize with the given values."""
        self.ring = ring
        self.rng = rng
        self.factor_bound = factor_bound
        self.verbose = verbose

    def log(self, message: str) -> None:
        """Print the message to stderr if verbose."""
        if self.verbose:
            print(message, file=sys.stderr)


class Outcome:
    """Collect the outputs and the verification of a command."""

    def __init__(
        self,
        outputs: Mapping[str, Any],
        verification: Verification,
        negative: Optional[MathematicalNegative] = None,
    ) -> None:
        """Initialize with the given values."""
        self.outputs = outputs
        self.verification = verification
        self.negative = negative


class NoReduction(MathematicalNegative):
    """Signal that no t makes a + b·t a unit."""


def make_ring(name: str, precision: Optional[int]) -> Ring[Any]:
    """Instantiate the ring by its command-line name."""
    if name == "H":
        return HenriksenRing(precision if precision is not None else DEFAULT_PRECISION)

    if precision is not None:
        raise PrecisionFlagInvalid(
            f"The precision applies only to the ring H, but the ring is {name}"
        )

    if name == "Z":
        return IntegerRing()
    elif name == "Qx":
        return PolynomialRing()
    else:
        raise UnsupportedRing(f"Unknown ring: {name}")


def _render(ring: Ring[Any], value: Any) -> Any:
    """Render elements in nested tuples and lists, leaving other values be."""
    if isinstance(value, (list, tuple)):
        return [_render(ring, item) for item in value]
    if value is None or isinstance(value, (bool, str)):
        return value
    return ring.render(value)


def _require_nonzero(ring: Ring[Any], a: Any) -> None:
    if ring.is_zero(a):
        raise ZeroElement(f"Expected a nonzero element of {ring}, but got 0")


def _sample_element(ring: Ring[Any], rng: random.Random) -> Any:
    constant = ring.from_int(rng.randint(-30, 30))
    if isinstance(ring, IntegerRing) or rng.random() < 0.5:
        return constant
    return ring.add(constant, ring.parse("x"))


def _sample_comaximal_pairs(
    ring: Ring[Any], rng: random.Random, count: int
) -> List[Tuple[Any, Any]]:
    pairs = []  # type: List[Tuple[Any, Any]]
    for _ in range(100 * count):
        if len(pairs) == count:
            break
        b, c = _sample_element(ring, rng), _sample_element(ring, rng)
        if kernel.is_comaximal(ring, b, c):
            pairs.append((b, c))
    return pairs


def _refuted(check: Callable[[], Any], exception: type) -> bool:
    """Check that ``check`` raises ``exception``."""
    try:
        check()
    except exception:
        return True
    return False


def run_gcd(context: Context, a: Any, b: Any) -> Outcome:
    """Compute the gcd certificate."""
    ring = context.ring
    cert = kernel.gcd_ext(ring, a, b)
    return Outcome(
        {
            "g": ring.render(cert.g),
            "u": ring.render(cert.u),
            "v": ring.render(cert.v),
            "a1": ring.render(cert.a1),
            "b1": ring.render(cert.b1),
            "comaximal": ring.is_unit(cert.g),
        },
        kernel.verify_gcd_cert(ring, a, b, cert),
    )


def run_classify(context: Context, a: Any) -> Outcome:
    """Run every predicate of the classifier on ``a``."""
    ring = context.ring
    _require_nonzero(ring, a)

    outputs = dict()  # type: Dict[str, Any]
    verification = []  # type: Verification

    if isinstance(ring, HenriksenRing):
        outputs["canonical_class"] = str(canonical_class(a))

    is_unit = ring.is_unit(a)
    outputs["unit"] = is_unit
    verification.append(("a is nonzero", not ring.is_zero(a)))

    if is_unit or isinstance(ring, PolynomialRing):
        outputs["pseudo_irreducible"] = None
    else:
        verdict = classifier.is_pseudo_irreducible(ring, a, context.factor_bound)
        outputs["pseudo_irreducible"] = verdict.verdict
        if isinstance(verdict.witness, classifier.Split):
            split = verdict.witness
            outputs["split"] = _render(ring, [split.b, split.c])
            outputs["idempotent"] = ring.render(split.idempotent)
            verification.extend(classifier.verify_split(ring, a, split))
        else:
            outputs["connected"] = str(verdict.witness)

    neat, neat_witness = classifier.is_neat(ring, a)
    outputs["neat"] = neat
    outputs["neat_witness"] = _render(ring, neat_witness)
    if neat_witness is not None:
        b, c = neat_witness
        verification.append(("b*R + c*R = R", kernel.is_comaximal(ring, b, c)))
        verification.append(
            (
                "no neat decomposition against (b, c)",
                _refuted(lambda: classifier.neat_decompose(ring, a, b, c), NotNeat),
            )
        )
    else:
        for b, c in _sample_comaximal_pairs(ring, context.rng, SAMPLE_COUNT):
            decomposition = classifier.neat_decompose(ring, a, b, c)
            verification.extend(
                (
                    f"{identity} for (b, c) = ({ring.render(b)}, {ring.render(c)})",
                    passed,
                )
                for identity, passed in classifier.verify_neat(
                    ring, a, b, c, decomposition
                )
            )

    adequate, adequate_witness = classifier.is_adequate(ring, a)
    outputs["adequate"] = adequate
    outputs["adequate_witness"] = _render(ring, adequate_witness)
    if adequate_witness is not None:
        verification.append(
            (
                "no adequate decomposition against b",
                _refuted(
                    lambda: classifier.adequate_decompose(ring, a, adequate_witness),
                    NotAdequate,
                ),
            )
        )
    verification.append(("adequate implies neat", not adequate or neat))

    almost_sr1 = classifier.is_almost_sr1(ring, a)
    outputs["almost_sr1"] = almost_sr1.verdict
    outputs["almost_sr1_witness"] = _render(ring, almost_sr1.witness)
    outputs["almost_sr1_enumerated"] = almost_sr1.enumerated
    if almost_sr1.witness is not None:
        b, c = almost_sr1.witness
        verification.append(
            (
                "b + c*t is never a unit modulo a",
                classifier.sr1_reduce(ring, b, c) is None,
            )
        )

    try:
        outputs["quotient"] = classifier.quotient_descriptor(
            ring, a, context.factor_bound
        ).kind.value
    except UnsupportedRing:
        outputs["quotient"] = None

    return Outcome(outputs, verification)


def run_factor(context: Context, elements: Sequence[Any]) -> Outcome:
    """
    Factor a single element of ℤ or H into comaximal pseudo-irreducibles.

    Several elements, and any elements of ℚ[x], are refined into a coprime basis
    instead.
    """
    ring = context.ring
    for element in elements:
        _require_nonzero(ring, element)

    if len(elements) > 1 or isinstance(ring, PolynomialRing):
        basis = kernel.coprime_basis(ring, elements)
        exponents = [
            kernel.coprime_exponents(ring, element, basis) for element in elements
        ]
        verification = [
            (
                "basis is pairwise comaximal",
                all(
                    kernel.is_comaximal(ring, basis[i], basis[j])
                    for i in range(len(basis))
                    for j in range(i + 1, len(basis))
                ),
            )
        ]  # type: Verification
        for element, (unit, powers) in zip(elements, exponents):
            factors = [
                factor for factor, power in zip(basis, powers) for _ in range(power)
            ]
            verification.append(
                (
                    f"{ring.render(element)} = unit * product of basis powers",
                    ring.is_unit(unit)
                    and ring.vanishes([(1, [element]), (-1, [unit, *factors])]),
                )
            )

        return Outcome(
            {
                "coprime_basis": _render(ring, basis),
                "exponents": [powers for _, powers in exponents],
            },
            verification,
        )

    a = elements[0]
    factorization = classifier.comax_factor(ring, a, context.factor_bound)
    verification = classifier.verify_comax_factorization(ring, a, factorization)
    verification.extend(
        (
            f"{ring.render(factor)} is pseudo-irreducible",
            classifier.is_pseudo_irreducible(
                ring, factor, context.factor_bound
            ).verdict,
        )
        for factor in factorization.factors
    )
    return Outcome(
        {
            "unit": ring.render(factorization.unit),
            "factors": _render(ring, factorization.factors),
        },
        verification,
    )


def _neat_verdict(context: Context, a: Any) -> Outcome:
    ring = context.ring
    _require_nonzero(ring, a)
    neat, witness = classifier.is_neat(ring, a)
    if witness is None:
        return Outcome({"neat": True}, [("a is nonzero", True)])

    b, c = witness
    return Outcome(
        {"neat": False, "witness": _render(ring, witness)},
        [
            ("b*R + c*R = R", kernel.is_comaximal(ring, b, c)),
            (
                "no neat decomposition against (b, c)",
                _refuted(lambda: classifier.neat_decompose(ring, a, b, c), NotNeat),
            ),
        ],
        NotNeat(f"{ring.render(a)} is not neat in {ring}", witness),
    )


def run_neat(context: Context, elements: Sequence[Any]) -> Outcome:
    """
    Dispatch on the number of elements.

    One element is tested for neatness, (a, b) is reduced to a neat a + b·t,
    (a, b, c) is decomposed, and (x, y, z, t) is reduced to x + λ·y = r·s.
    """
    ring = context.ring

    if len(elements) == 1:
        return _neat_verdict(context, elements[0])

    elif len(elements) == 2:
        a, b = elements
        t = classifier.neat_range_one_reduce(ring, a, b)
        shifted = ring.linear_form([(1, [a]), (1, [b, t])])
        return Outcome(
            {"t": ring.render(t), "neat_element": ring.render(shifted)},
            [
                ("a*R + b*R = R", kernel.is_comaximal(ring, a, b)),
                ("a + b*t is neat", classifier.is_neat(ring, shifted)[0]),
            ],
        )

    elif len(elements) == 3:
        a, b, c = elements
        _require_nonzero(ring, a)
        decomposition = classifier.neat_decompose(ring, a, b, c)
        return Outcome(
            {"r": ring.render(decomposition.r), "s": ring.render(decomposition.s)},
            classifier.verify_neat(ring, a, b, c, decomposition),
        )

    elif len(elements) == 4:
        x, y, z, t = elements
        shift, r, s = classifier.neat_range_reduce(ring, x, y, z, t)
        n = ring.linear_form([(1, [x]), (1, [shift, y])])
        return Outcome(
            {
                "lambda": ring.render(shift),
                "r": ring.render(r),
                "s": ring.render(s),
            },
            [("x*R + y*R = R", kernel.is_comaximal(ring, x, y))]
            + classifier.verify_neat(
                ring, n, z, t, classifier.NeatDecomposition(r, s)
            ),
        )

    else:
        raise _ArgumentCount(
            f"The command neat expects 1 to 4 elements, but got {len(elements)}"
        )


class _ArgumentCount(UsageError):
    """Signal an unexpected number of the positional arguments."""


def run_adequate(context: Context, elements: Sequence[Any]) -> Outcome:
    """Test ``a`` for adequacy, or decompose ``a`` against ``b``."""
    ring = context.ring
    for element in elements[:1]:
        _require_nonzero(ring, element)

    if len(elements) == 1:
        a = elements[0]
        adequate, witness = classifier.is_adequate(ring, a)
        if witness is None:
            return Outcome({"adequate": True}, [("a is nonzero", True)])

        return Outcome(
            {"adequate": False, "witness": ring.render(witness)},
            [
                (
                    "no adequate decomposition against b",
                    _refuted(
                        lambda: classifier.adequate_decompose(ring, a, witness),
                        NotAdequate,
                    ),
                )
            ],
            NotAdequate(f"{ring.render(a)} is not adequate in {ring}", witness),
        )

    elif len(elements) == 2:
        a, b = elements
        decomposition = classifier.adequate_decompose(ring, a, b)
        return Outcome(
            {"r": ring.render(decomposition.r), "s": ring.render(decomposition.s)},
            classifier.verify_adequate(ring, a, b, decomposition),
        )

    else:
        raise _ArgumentCount(
            f"The command adequate expects 1 or 2 elements, but got {len(elements)}"
        )


def run_sr1(context: Context, a: Any, b: Any) -> Outcome:
    """Reduce the comaximal pair (a, b) to a unit a + b·t if possible."""
    ring = context.ring
    t = classifier.sr1_reduce(ring, a, b)
    comaximal = ("a*R + b*R = R", kernel.is_comaximal(ring, a, b))

    if t is None:
        if isinstance(ring, PolynomialRing):
            decision = "the remainder of a modulo b is not a nonzero constant"
        elif isinstance(ring, HenriksenRing):
            decision = (
                f"the constant term of a + b*t is {a.z0} + {b.z0}*t0 "
                f"for an integer t0, which is never 1 or -1"
            )
        else:
            decision = "a is congruent to neither 1 nor -1 modulo b"
        return Outcome(
            {"t": None, "decision": decision},
            [comaximal],
            NoReduction(
                f"No t makes {ring.render(a)} + {ring.render(b)}*t a unit in {ring}: "
                f"{decision}"
            ),
        )

    unit = ring.linear_form([(1, [a]), (1, [b, t])])
    return Outcome(
        {"t": ring.render(t), "unit": ring.render(unit)},
        [comaximal, ("a + b*t is a unit", ring.is_unit(unit))],
    )


def run_sr2(context: Context, a: Any, b: Any, c: Any) -> Outcome:
    """Reduce the unimodular triple (a, b, c) to a comaximal pair."""
    ring = context.ring
    x, y = classifier.sr2_reduce(ring, a, b, c, context.factor_bound)
    return Outcome(
        {"x": ring.render(x), "y": ring.render(y)},
        classifier.verify_sr2(ring, a, b, c, x, y),
    )


def run_quotient(context: Context, a: Any) -> Outcome:
    """Describe R/aR."""
    ring = context.ring
    _require_nonzero(ring, a)
    descriptor = classifier.quotient_descriptor(ring, a, context.factor_bound)

    verification = []  # type: Verification
    kind = descriptor.kind
    if kind is classifier.QuotientKind.TRIVIAL_RING:
        verification.append(("a is a unit", ring.is_unit(a)))

    elif kind is classifier.QuotientKind.CONNECTED_NON_LOCAL:
        assert descriptor.witness is not None
        b, c = descriptor.witness
        verification.extend(
            [
                ("b is a nonunit modulo a", not kernel.is_comaximal(ring, b, a)),
                ("c is a nonunit modulo a", not kernel.is_comaximal(ring, c, a)),
                ("b*R + c*R = R", kernel.is_comaximal(ring, b, c)),
                (
                    "R/aR is connected",
                    classifier.is_pseudo_irreducible(
                        ring, a, context.factor_bound
                    ).verdict,
                ),
            ]
        )

    else:
        idempotents = [component.idempotent for component in descriptor.components]
        for component in descriptor.components:
            e = component.idempotent
            verification.append(
                (
                    f"e^2 = e mod a for {component.label}",
                    kernel.divides(ring, a, ring.linear_form([(1, [e, e]), (-1, [e])])),
                )
            )
            verification.append(
                (
                    f"e = 1 mod the modulus of {component.label}",
                    kernel.divides(
                        ring, component.modulus, ring.subtract(e, ring.one())
                    ),
                )
            )
        verification.append(
            (
                "the idempotents sum to 1 mod a",
                kernel.divides(
                    ring,
                    a,
                    ring.linear_form(
                        [(1, [e]) for e in idempotents] + [(-1, [ring.one()])]
                    ),
                ),
            )
        )

    return Outcome(
        {
            "kind": kind.value,
            "components": [
                {
                    "label": component.label,
                    "modulus": ring.render(component.modulus),
                    "valuation_ring": component.is_valuation,
                    "idempotent": ring.render(component.idempotent),
                }
                for component in descriptor.components
            ],
            "minimal_prime_count": descriptor.minimal_prime_count,
            "witness": _render(ring, descriptor.witness),
            "everywhere_adequate": classifier.is_everywhere_adequate_quotient(
                ring, a, context.factor_bound
            ),
        },
        verification,
    )


def run_snf(context: Context, matrix: matrices.Matrix[Any]) -> Outcome:
    """Compute the Hermite and the Smith normal forms with their certificates."""
    transform, triangular = matrices.hermite(matrix)
    cert = matrices.smith(matrix, context.factor_bound)
    ring = context.ring

    verification = [
        (f"hermite: {identity}", passed)
        for identity, passed in matrices.verify_hermite(matrix, transform, triangular)
    ]
    verification.extend(matrices.verify_smith(matrix, cert))

    return Outcome(
        {
            "U": transform.render(),
            "T": triangular.render(),
            "P": cert.p.render(),
            "Q": cert.q.render(),
            "D": cert.d.render(),
            "diagonal": _render(ring, cert.diagonal()),
            "determinantal_divisors": _render(ring, matrices.minor_gcd_chain(matrix)),
            "verified_precision": cert.verified_precision,
        },
        verification,
    )


def run_find(context: Context, kind: classifier.SpecialKind) -> Outcome:
    """Find the first nonunit of the given kind."""
    ring = context.ring
    element = classifier.find_special_elements(ring, kind, context.factor_bound)

    if kind is classifier.SpecialKind.LOCAL_QUOTIENT:
        passed = (
            classifier.quotient_descriptor(ring, element, context.factor_bound).kind
            is classifier.QuotientKind.LOCAL
        )
    elif kind is classifier.SpecialKind.NONUNIT_ADEQUATE:
        passed = classifier.is_adequate(ring, element)[0]
    elif kind is classifier.SpecialKind.NONUNIT_NEAT:
        passed = classifier.is_neat(ring, element)[0]
    else:
        assert_never(kind)

    return Outcome(
        {"element": ring.render(element)},
        [
            ("the element is a nonunit", not ring.is_unit(element)),
            (f"the element is {kind.value}", passed),
        ],
    )


#: Handlers of the commands over ring elements with the expected number of elements
_ELEMENT_COMMANDS = {
    "gcd": ("compute the certified gcd of a and b", 2, run_gcd),
    "classify": ("classify the element a", 1, run_classify),
    "factor": ("factor into pairwise comaximal factors", "+", run_factor),
    "neat": ("decide or decompose by neatness", "+", run_neat),
    "adequate": ("decide or decompose by adequacy", "+", run_adequate),
    "sr1": ("reduce a comaximal pair to a unit", 2, run_sr1),
    "sr2": ("reduce a unimodular triple to a comaximal pair", 3, run_sr2),
    "quotient": ("describe the quotient ring R/aR", 1, run_quotient),
}  # type: Dict[str, Tuple[str, Any, Callable[..., Outcome]]]


def _new_document(
    operation: Optional[str], ring: Optional[str], seed: int
) -> Dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "operation": operation,
        "ring": ring,
        "precision": None,
        "seed": seed,
        "inputs": None,
        "outputs": None,
        "verification": [],
        "error": None,
    }


class _Parser(argparse.ArgumentParser):
    """Report the malformed arguments as a usage document before exiting."""

    def error(self, message: str) -> NoReturn:
        """Print the usage document to stdout and the usage to stderr, then exit."""
        # The sub-command parsers are named "<program> <command>".
        parts = self.prog.split()
        operation = parts[-1] if len(parts) > 1 else None

        document = _new_document(operation=operation, ring=None, seed=0)
        document["error"] = _error_entry(None, InvalidArguments(message))
        print(json.dumps(document, indent=2, ensure_ascii=False))

        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _make_parser(prog: str) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--ring", help="ring to compute in", choices=["Z", "Qx", "H"], required=True
    )
    common.add_argument(
        "--precision",
        help=f"truncation precision in H (default: {DEFAULT_PRECISION})",
        type=int,
    )
    common.add_argument(
        "--seed", help="seed of the sampled checks (default: 0)", type=int, default=0
    )
    common.add_argument(
        "--factor-bound",
        help=f"trial division bound (default: {DEFAULT_FACTOR_BOUND})",
        type=int,
        default=DEFAULT_FACTOR_BOUND,
    )
    common.add_argument(
        "--verbose", help="report the progress to stderr", action="store_true"
    )

    parser = _Parser(prog=prog, description=__doc__)
    parser.add_argument(
        "--version", help="show the current version and exit", action="store_true"
    )

    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (help_text, nargs, _) in _ELEMENT_COMMANDS.items():
        subparser = subparsers.add_parser(name, help=help_text, parents=[common])
        subparser.add_argument("elements", nargs=nargs, help="ring elements")

    snf = subparsers.add_parser(
        "snf", help="compute the certified Smith normal form", parents=[common]
    )
    snf.add_argument("matrix", help="matrix as 'a,b;c,d' or a JSON array of arrays")

    find = subparsers.add_parser(
        "find", help="find the first nonunit of a kind", parents=[common]
    )
    find.add_argument(
        "kind", choices=[kind.value for kind in classifier.SpecialKind]
    )

    return parser


def _execute(
    context: Context, args: argparse.Namespace
) -> Tuple[Dict[str, Any], Outcome]:
    """Parse the inputs of the command and run it; return the normalized inputs."""
    ring = context.ring

    if args.command == "snf":
        matrix = matrices.parse_matrix(ring, args.matrix)
        context.log(
            f"Computing the Smith form of a "
            f"{matrix.row_count}×{matrix.column_count} matrix over {ring}"
        )
        return {"matrix": matrix.render()}, run_snf(context, matrix)

    if args.command == "find":
        kind = classifier.SpecialKind(args.kind)
        context.log(f"Searching for an element of the kind {kind.value} in {ring}")
        return {"kind": kind.value}, run_find(context, kind)

    _, nargs, handler = _ELEMENT_COMMANDS[args.command]
    elements = [ring.parse(text) for text in args.elements]
    inputs = {"elements": [ring.render(element) for element in elements]}
    context.log(f"Running {args.command} on {', '.join(inputs['elements'])} in {ring}")

    if nargs == "+":
        return inputs, handler(context, elements)
    return inputs, handler(context, *elements)


def _category(error: Error) -> str:
    if isinstance(error, MathematicalNegative):
        return "mathematical-negative"
    elif isinstance(error, ResourceBound):
        return "resource-bound"
    else:
        return "usage"


def _exit_code(category: str) -> int:
    return {"mathematical-negative": 1, "usage": 2, "resource-bound": 3}[category]


def _error_entry(ring: Optional[Ring[Any]], error: Error) -> Dict[str, Any]:
    entry = {
        "category": _category(error),
        "type": type(error).__name__,
        "message": error.message,
    }  # type: Dict[str, Any]

    witness = getattr(error, "witness", None)
    if witness is not None and ring is not None:
        entry["witness"] = _render(ring, witness)

    position = getattr(error, "position", None)
    if position is not None:
        entry["position"] = position

    return entry


def main(prog: str, argv: Optional[Sequence[str]] = None) -> int:
    """
    Execute the main routine.

    :param prog: name of the program to be displayed in the help
    :param argv: command-line arguments; ``sys.argv[1:]`` if not given
    :return: exit code
    """
    arguments = list(sys.argv[1:] if argv is None else argv)

    parser = _make_parser(prog)

    # NOTE: ``--version`` must work without the otherwise required sub-command.
    if "--version" in arguments and "--help" not in arguments:
        print(bezoutkit.__version__)
        return 0

    args = parser.parse_args(arguments)

    document = _new_document(
        operation=args.command, ring=args.ring, seed=args.seed
    )

    ring = None  # type: Optional[Ring[Any]]
    exit_code = 0
    try:
        ring = make_ring(args.ring, args.precision)
        if isinstance(ring, HenriksenRing):
            document["precision"] = ring.precision

        context = Context(
            ring=ring,
            rng=random.Random(args.seed),
            factor_bound=args.factor_bound,
            verbose=args.verbose,
        )

        inputs, outcome = _execute(context, args)
        document["inputs"] = inputs
        document["outputs"] = outcome.outputs
        document["verification"] = [
            {"identity": identity, "result": "pass" if passed else "fail"}
            for identity, passed in outcome.verification
        ]

        failed = [identity for identity, passed in outcome.verification if not passed]
        context.log(
            f"Verified {len(outcome.verification) - len(failed)} "
            f"of {len(outcome.verification)} identities"
        )

        if outcome.negative is not None:
            document["error"] = _error_entry(ring, outcome.negative)
            exit_code = 1
        if failed:
            exit_code = 3
            print(
                f"The verification failed for: {'; '.join(failed)}", file=sys.stderr
            )

    except Error as error:
        document["error"] = _error_entry(ring, error)
        exit_code = _exit_code(document["error"]["category"])

    except icontract.ViolationError as error:
        document["error"] = {
            "category": "usage",
            "type": "ViolationError",
            "message": str(error).splitlines()[0] if str(error) else "",
        }
        exit_code = 2

    print(json.dumps(document, indent=2, ensure_ascii=False))

    if document["error"] is not None:
        print(
            f"{document['error']['type']}: {document['error']['message']}",
            file=sys.stderr,
        )

    return exit_code


def entry_point() -> int:
    """Provide an entry point for a console script."""
    return main(prog="bezout-kit")


if __name__ == "__main__":
    sys.exit(main(prog="bezout-kit"))
