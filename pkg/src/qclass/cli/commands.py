"""
Command-line dispatch.

``run(argv)`` parses the arguments, loads the configuration and the
instance file, runs one command and returns the process exit status:
0 on success or a passing verification, 1 on a failing verification or an
integrity error, 2 when a hypothesis or size bound is not met, 64 on
usage and input errors.
"""
import argparse
import json
import logging
import os
import sys
from dataclasses import replace
from typing import Any, Callable, Optional, Sequence, TextIO, Union

from qclass.core.config import QClassConfig
from qclass.core.config_parser import apply_env_overrides, get_config, load_config, set_config
from qclass.core.errors import (
    EXIT_FAIL,
    EXIT_OK,
    InvalidInputError,
    QClassError,
    format_error_response,
)
from qclass.core.instance_parser import load_instance
from qclass.core.logging import log_with_metadata, setup_logging
from qclass.core.models import InstanceFile, VerdictReport
from qclass.digraph.chromatic import chromatic_qcf
from qclass.digraph.decomposition import verify_orientation_decomposition
from qclass.digraph.graph import Digraph
from qclass.dposet.enumeration import omega_qcf, weighted_omega_qcf
from qclass.dposet.poset import DoublePoset
from qclass.groups.character_table import character_table
from qclass.groups.group import PermGroup, parse_group
from qclass.qsym.equivariant import t_coefficient
from qclass.qsym.expr import QSymExpr
from qclass.qsym.specialization import principal_specialization
from qclass.verify.effectiveness import (
    check_F_effective,
    check_flawless,
    check_h_effective,
    check_isotypic_F_positive,
    check_isotypic_flawless,
    check_M_increasing,
)
from qclass.verify.harness import SUITES, run_selftest
from qclass.verify.orbital import (
    check_orbital_reciprocity_digraph,
    check_orbital_reciprocity_dposet,
    coeven,
    orbital,
)
from qclass.verify.reciprocity import (
    check_quotient_identity,
    check_reciprocity_digraph,
    check_reciprocity_dposet,
    check_weighted_reciprocity,
)
from qclass.cli.render import expression_document, poly_document, render, table_document


logger = logging.getLogger(__name__)

Structure = Union[DoublePoset, Digraph]

THEOREMS = (
    'reciprocity',
    'f-effective',
    'm-increasing',
    'flawless',
    'h-effective',
    'orbital-reciprocity',
    'orientation-decomposition',
    'quotient',
    'weighted-reciprocity',
    'isotypic',
)


class UsageError(InvalidInputError):
    """Unknown subcommand or malformed arguments."""


class ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting, so ``run`` can map it to status 64."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message, data={"usage": self.format_usage().strip()})


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--tsv', action='store_true', default=argparse.SUPPRESS,
                        help='print tab-separated tables instead of JSON')
    common.add_argument('--config', default=argparse.SUPPRESS, help='JSON configuration file')
    common.add_argument('--log-level', default=argparse.SUPPRESS,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])

    parser = ArgumentParser(
        prog='qclass',
        description='Equivariant quasisymmetric invariants of double posets and digraphs',
        parents=[common],
    )
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    chartable = commands.add_parser('chartable', parents=[common], help='character table of the instance group')
    chartable.add_argument('file')
    chartable.add_argument('--method', choices=['dixon', 'oracle'], default='dixon')

    omega = commands.add_parser('omega', parents=[common], help='equivariant enumerator of a double poset')
    omega.add_argument('file')
    omega.add_argument('--basis', choices=['M', 'F'], default='M')
    projection = omega.add_mutually_exclusive_group()
    projection.add_argument('--orbital', action='store_true')
    projection.add_argument('--coeven', action='store_true')

    chromatic = commands.add_parser('chromatic', parents=[common], help='chromatic class function of a digraph')
    chromatic.add_argument('file')
    chromatic.add_argument('--basis', choices=['M', 'F'], default='M')
    chromatic.add_argument('--t-degree', type=int, default=None)
    projection = chromatic.add_mutually_exclusive_group()
    projection.add_argument('--orbital', action='store_true')
    projection.add_argument('--coeven', action='store_true')

    orderpoly = commands.add_parser('orderpoly', parents=[common], help='order or chromatic polynomial')
    orderpoly.add_argument('file')
    orderpoly.add_argument('--at', type=int, default=None)

    verify = commands.add_parser('verify', parents=[common], help='check a theorem on an instance')
    verify.add_argument('theorem', choices=THEOREMS)
    verify.add_argument('file')
    verify.add_argument('--h-vector', action='store_true',
                        help='for flawless: check the h-vector instead of the f-vector')

    selftest = commands.add_parser('selftest', parents=[common], help='run the random-instance suites')
    selftest.add_argument('--seed', type=int, default=None)
    selftest.add_argument('--count', type=int, default=None)
    selftest.add_argument('--workers', type=int, default=None)
    selftest.add_argument('--suite', action='append', choices=SUITES, default=None)
    selftest.add_argument('--explore', action='store_true',
                          help='also run reciprocity on double posets that are not locally special')
    return parser


def _configure(args: argparse.Namespace) -> QClassConfig:
    path = getattr(args, 'config', None)
    config = load_config(path) if path is not None else get_config()
    config = apply_env_overrides(config, os.environ)
    level = getattr(args, 'log_level', None)
    if level is not None:
        config = replace(config, log_level=level)
    setup_logging(config.log_level)
    set_config(config)
    return config


def _load(path: str, config: QClassConfig) -> tuple[InstanceFile, Structure, PermGroup]:
    """The instance, its structure and the acting group (given generators or the automorphism group)."""
    instance = load_instance(path)
    structure: Structure = (
        DoublePoset.from_payload(instance.payload)
        if instance.kind == 'double-poset'
        else Digraph.from_payload(instance.payload)
    )
    labels = structure.elements if isinstance(structure, DoublePoset) else structure.vertices
    if instance.group is not None:
        group = parse_group(instance.group, labels, config.limits)
        structure.require_symmetry(group)
    else:
        group = structure.automorphisms(config.limits)
    log_with_metadata(logger, logging.INFO, "Loaded instance",
                      {"name": instance.name, "kind": instance.kind, "size": len(labels), "group_order": group.order})
    return instance, structure, group


def _require(structure: Structure, kind: type, command: str) -> None:
    if not isinstance(structure, kind):
        expected = 'double-poset' if kind is DoublePoset else 'digraph'
        raise InvalidInputError(f"'{command}' needs a {expected} instance", data={"command": command})


def _invariant(structure: Structure, group: PermGroup, config: QClassConfig) -> QSymExpr:
    """Ω(D, 𝔊) for a double poset, χ(G, 𝔊) for a digraph."""
    if isinstance(structure, DoublePoset):
        if structure.has_unit_weights:
            return omega_qcf(structure, group, config.limits)
        return weighted_omega_qcf(structure, group, config.limits)
    return chromatic_qcf(structure, group, config.limits)


def _project(q: QSymExpr, group: PermGroup, args: argparse.Namespace) -> tuple[QSymExpr, Optional[PermGroup], str]:
    if args.orbital:
        return orbital(q, group), None, 'orbital'
    if args.coeven:
        return coeven(q, group), None, 'coeven'
    return q, group, 'class-function'


def cmd_chartable(args: argparse.Namespace, config: QClassConfig) -> tuple[Any, int]:
    instance, _, group = _load(args.file, config)
    return table_document(character_table(group, args.method, config.limits), instance.name), EXIT_OK


def cmd_omega(args: argparse.Namespace, config: QClassConfig) -> tuple[Any, int]:
    instance, structure, group = _load(args.file, config)
    _require(structure, DoublePoset, 'omega')
    q, table_group, form = _project(_invariant(structure, group, config), group, args)
    return expression_document(q.to_basis(args.basis), table_group, instance.name, form=form), EXIT_OK


def cmd_chromatic(args: argparse.Namespace, config: QClassConfig) -> tuple[Any, int]:
    instance, structure, group = _load(args.file, config)
    _require(structure, Digraph, 'chromatic')
    q = _invariant(structure, group, config)
    extra: dict[str, Any] = {}
    if args.t_degree is not None:
        q = t_coefficient(q, args.t_degree)
        extra['t_degree'] = args.t_degree
    q, table_group, form = _project(q, group, args)
    polynomial = args.t_degree is None
    return expression_document(q.to_basis(args.basis), table_group, instance.name, polynomial,
                               form=form, **extra), EXIT_OK


def cmd_orderpoly(args: argparse.Namespace, config: QClassConfig) -> tuple[Any, int]:
    instance, structure, group = _load(args.file, config)
    poly = principal_specialization(_invariant(structure, group, config))
    return poly_document(poly, group, instance.name, args.at, isinstance(structure, Digraph)), EXIT_OK


def _verify(theorem: str, structure: Structure, group: PermGroup, config: QClassConfig,
            name: str, h_vector: bool) -> VerdictReport:
    limits = config.limits
    poset = structure if isinstance(structure, DoublePoset) else None
    if theorem == 'reciprocity':
        if poset is not None:
            return check_reciprocity_dposet(poset, group, limits, name)
        return check_reciprocity_digraph(structure, group, limits, name)  # type: ignore[arg-type]
    if theorem == 'orbital-reciprocity':
        if poset is not None:
            return check_orbital_reciprocity_dposet(poset, group, limits, name)
        return check_orbital_reciprocity_digraph(structure, group, limits, name)  # type: ignore[arg-type]
    if theorem == 'orientation-decomposition':
        _require(structure, Digraph, 'verify orientation-decomposition')
        return verify_orientation_decomposition(structure, group, limits, name)  # type: ignore[arg-type]
    if theorem == 'quotient':
        _require(structure, DoublePoset, 'verify quotient')
        return check_quotient_identity(poset, group, limits, name)  # type: ignore[arg-type]
    if theorem == 'weighted-reciprocity':
        _require(structure, DoublePoset, 'verify weighted-reciprocity')
        return check_weighted_reciprocity(poset, limits, name)  # type: ignore[arg-type]

    q = _invariant(structure, group, config)
    table = character_table(group, limits=limits)
    if theorem == 'f-effective':
        return check_F_effective(q, group, table, name)
    if theorem == 'm-increasing':
        return check_M_increasing(q, group, table, name)
    poly = principal_specialization(q)
    if theorem == 'flawless':
        if h_vector:
            return check_flawless(poly.h_vector(), group, table, name, theorem='h-flawless')
        return check_flawless(poly.f, group, table, name)
    if theorem == 'h-effective':
        return check_h_effective(poly, group, table, name)
    return VerdictReport.combine('isotypic', name, [
        check_isotypic_F_positive(q, group, table, name),
        check_isotypic_flawless(poly, group, table, name, h_positive=poset is not None),
    ])


def cmd_verify(args: argparse.Namespace, config: QClassConfig) -> tuple[Any, int]:
    instance, structure, group = _load(args.file, config)
    verdict = _verify(args.theorem, structure, group, config, instance.name, args.h_vector)
    return verdict, EXIT_OK if verdict.passed else EXIT_FAIL


def cmd_selftest(args: argparse.Namespace, config: QClassConfig) -> tuple[Any, int]:
    overrides = {key: getattr(args, key) for key in ('seed', 'count', 'workers') if getattr(args, key) is not None}
    try:
        settings = replace(config.selftest, **overrides)
    except ValueError as e:
        raise UsageError(str(e), data=overrides)
    suites = tuple(args.suite) if args.suite else SUITES
    summary = run_selftest(settings, config.limits, suites, args.explore)
    return summary, EXIT_OK if summary['passed'] else EXIT_FAIL


COMMANDS: dict[str, Callable[[argparse.Namespace, QClassConfig], tuple[Any, int]]] = {
    'chartable': cmd_chartable,
    'omega': cmd_omega,
    'chromatic': cmd_chromatic,
    'orderpoly': cmd_orderpoly,
    'verify': cmd_verify,
    'selftest': cmd_selftest,
}


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        stdout: Stream for command output
        stderr: Stream for error reports

    Returns:
        Process exit status
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else sys.argv[1:])
        config = _configure(args)
        document, status = COMMANDS[args.command](args, config)
    except QClassError as e:
        log_with_metadata(logger, logging.ERROR, f"Command failed: {e.message}",
                          {"type": type(e).__name__, "code": e.code})
        stderr.write(json.dumps(format_error_response(e), sort_keys=True, default=str) + "\n")
        return e.code
    stdout.write(render(document, getattr(args, 'tsv', False)))
    return status
