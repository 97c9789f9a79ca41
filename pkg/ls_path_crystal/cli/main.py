import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from ..algebra.affine_data import build_datum, describe
from ..algebra.weights import d_lambda
from ..core.errors import CapExceededError, ConfigError, LSCrystalError
from ..core.logger import init_logger
from ..core.utils import ensure_makedirs, frac_list, json_output, output
from ..crystal.affinization import Affinization
from ..crystal.crystal_graph import export, generate_depth_bounded
from ..crystal.ls_crystal import LSCrystal
from ..type import constants
from ..type.config import RunConfig
from ..type.report import VerificationReport

logger = logging.getLogger(__name__)

kCommands = {
    "datum": [None],
    "crystal": ["gen", "components"],
    "verify": ["chains", "comps", "simple", "theta", "axioms"],
    "export": [None],
}


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--type", dest="type_label", help="affine type label, e.g. A2~1")
    parent.add_argument("--shape", dest="shape", help="multiplicities over I_0, e.g. 1,1")
    parent.add_argument("--depth", dest="depth", type=int)
    parent.add_argument("--cap", dest="cap", type=int)
    parent.add_argument("--nmax", dest="n_max", type=int)
    parent.add_argument("--nbound", dest="n_bound")
    parent.add_argument("--samples", dest="samples", type=int)
    parent.add_argument("--seed", dest="seed", type=int)
    parent.add_argument("--threads", dest="threads", type=int)
    parent.add_argument("--format", dest="output_format", choices=constants.EXPORT_FORMATS)
    parent.add_argument("--output", dest="output_path")
    parent.add_argument("--config", dest="config_path")
    parent.add_argument("--log-level", dest="log_level")
    return parent


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog="ls-crystal",
        description="LS-path crystals of level-zero shape for affine Lie algebras.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, actions in kCommands.items():
        if actions == [None]:
            commands.add_parser(name, parents=[common])
            continue
        sub = commands.add_parser(name).add_subparsers(dest="action", required=True)
        for action in actions:
            sub.add_parser(action, parents=[common])

    return parser.parse_args(argv)


def _log_level(name: str) -> int:
    level = logging.getLevelName(str(name).upper())
    if not isinstance(level, int):
        raise ConfigError("unknown log level. [log_level={}]".format(name))
    return level


def _emit(config: RunConfig, text: str):
    if config.output_path is not None:
        ensure_makedirs(os.path.dirname(config.output_path) or ".")
        output(config.output_path, text)
        logger.info("output written. [path={}]".format(config.output_path))
    sys.stdout.write(text + "\n")


def _summarize(report: VerificationReport):
    if report.passed:
        logger.info("verification passed. [kind={}] [rows={}]".format(report.kind, len(report.rows)))
        return
    logger.warning("verification failed. [kind={}] [violations={}] [partial={}]".format(
        report.kind, len(report.violations), report.partial))


def _crystal(config: RunConfig) -> LSCrystal:
    datum = build_datum(config.affine_type)
    return LSCrystal(datum, config.dominant_shape, config.cap, config.threads)


def _run_datum(config: RunConfig) -> int:
    datum = build_datum(config.affine_type)
    _emit(config, json_output(describe(datum)))
    return constants.EXIT_OK


def _graph_text(config: RunConfig, fmt: str) -> str:
    crystal = _crystal(config)
    if config.depth is None:
        g = crystal.classical_graph
    else:
        g = generate_depth_bounded(crystal.pi_lambda, crystal.ops, config.depth)
    logger.info("crystal graph ready. [vertices={}] [edges={}]".format(len(g), len(g.edges)))
    return export(g, fmt)


def _run_graph(config: RunConfig, fmt: str) -> int:
    try:
        text = _graph_text(config, fmt)
    except CapExceededError as e:
        logger.warning(str(e))
        payload: Dict[str, Any] = {"partial": True}
        if e.partial is not None:
            payload["graph"] = e.partial.get_dict
        _emit(config, json_output(payload))
        return constants.EXIT_VIOLATION

    _emit(config, text)
    return constants.EXIT_OK


def _run_components(config: RunConfig) -> int:
    crystal = _crystal(config)
    valid, rejected = crystal.valid_signatures(config.n_max)

    payload: Dict[str, Any] = {
        "type": config.affine_type.label,
        "shape": crystal.shape.get_dict,
        "turn": frac_list(crystal.turn),
        "d_lambda": None if crystal.shape.is_zero else d_lambda(crystal.datum, crystal.shape),
        "components": [{
            "signature": sig.get_dict,
            "extremal": crystal.canonical_extremal(sig).get_dict,
        } for sig in valid],
        "rejected": [{"signature": sig.get_dict, "index": u} for sig, u in rejected],
    }
    logger.info("components listed. [valid={}] [rejected={}]".format(len(valid), len(rejected)))
    _emit(config, json_output(payload))
    return constants.EXIT_OK


def _run_verify(config: RunConfig, action: str) -> int:
    crystal = _crystal(config)

    if action == "chains":
        report = crystal.verify_chains(config.n_max)
    elif action == "comps":
        depth = config.depth if config.depth is not None else constants.DEFAULT_DEPTH
        report = crystal.verify_theorem_comps(depth, config.n_max)
    elif action == "simple":
        report = crystal.verify_simple()
    elif action == "theta":
        report = Affinization(crystal).verify_theta(config.n_bound, config.depth)
    else:
        depth = config.depth if config.depth is not None else constants.DEFAULT_DEPTH
        report = crystal.verify_axioms(depth, config.samples, config.seed)

    _summarize(report)
    _emit(config, json_output(report.get_dict))
    return constants.EXIT_OK if report.passed else constants.EXIT_VIOLATION


def run(args: argparse.Namespace) -> int:
    overrides = {k: getattr(args, k, None) for k in RunConfig.kFields}
    config = RunConfig.build(overrides, getattr(args, "config_path", None))
    init_logger(_log_level(config.log_level))

    config.validate(need_shape=args.command != "datum")
    logger.debug("config resolved. [config={}]".format(config.get_json))

    if args.command == "datum":
        return _run_datum(config)
    if args.command == "export":
        return _run_graph(config, config.output_format)
    if args.command == "crystal" and args.action == "gen":
        return _run_graph(config, constants.FORMAT_JSON)
    if args.command == "crystal":
        return _run_components(config)
    return _run_verify(config, args.action)


def main(argv: Optional[List[str]] = None) -> int:
    args = _parse_args(argv)
    try:
        return run(args)
    except LSCrystalError as e:
        init_logger()
        logger.error(str(e))
        return constants.EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
