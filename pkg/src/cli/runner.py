import logging
from typing import Callable

from module.experiments import (
    Report,
    oracle_report,
    polarization_report,
    representation_refinement,
    riesz_field,
    spectrum_report,
    sweep_reverse_faber_krahn,
    sweep_riesz,
    verify_boundary_decay,
    verify_first_eigenfunction,
    verify_oracle_agreement,
    verify_positivity,
    verify_representation,
    verify_reverse_faber_krahn,
    verify_riesz,
    verify_uniform_bound,
)
from .enums import RunCommand
from .schema import RunConfig

logger = logging.getLogger("cli.runner")


def _spectrum(config: RunConfig) -> Report:
    return spectrum_report(config.domain, config.pitch, config.count, config.dump)


def _polarize(config: RunConfig) -> Report:
    return polarization_report(config.domain, config.polarizer, config.pitch)


def _oracle(config: RunConfig) -> Report:
    table = oracle_report(config.radius, config.ns)
    if "pitches" not in config.model_fields_set:
        return table

    agreement = verify_oracle_agreement(config.radius, config.pitch, max(config.ns))
    return agreement.model_copy(
        update={
            "quantities": {**table.quantities, **agreement.quantities},
            "series": table.series + agreement.series,
        }
    )


def _fk(config: RunConfig) -> Report:
    if config.random is not None:
        return sweep_reverse_faber_krahn(config.random, config.pitch, config.seed)
    return verify_reverse_faber_krahn(config.domain, config.polarizer, config.pitch, config.seed)


def _riesz(config: RunConfig) -> Report:
    if config.random is not None:
        return sweep_riesz(config.random, config.pitch, config.seed)
    f = riesz_field(config.domain, config.polarizer, config.pitch, config.seed)
    return verify_riesz(config.domain, config.polarizer, f, config.seed)


def _positivity(config: RunConfig) -> Report:
    return verify_positivity(config.domain, config.pitches, config.seed)


def _representation(config: RunConfig) -> Report:
    if len(config.pitches) > 1:
        return representation_refinement(
            config.domain, config.pitches, config.z, config.r, config.seed
        )
    return verify_representation(config.domain, config.pitch, config.z, config.r, config.seed)


def _bound(config: RunConfig) -> Report:
    return verify_uniform_bound(config.domain, config.trials, config.pitch, config.seed)


def _decay(config: RunConfig) -> Report:
    return verify_boundary_decay(config.domain, config.radii, config.pitch, config.seed)


def _eigenfunction(config: RunConfig) -> Report:
    return verify_first_eigenfunction(config.domain, config.pitch, config.seed)


HANDLERS: dict[RunCommand, Callable[[RunConfig], Report]] = {
    RunCommand.SPECTRUM: _spectrum,
    RunCommand.POLARIZE: _polarize,
    RunCommand.ORACLE: _oracle,
    RunCommand.FK: _fk,
    RunCommand.RIESZ: _riesz,
    RunCommand.POSITIVITY: _positivity,
    RunCommand.REPRESENTATION: _representation,
    RunCommand.BOUND: _bound,
    RunCommand.DECAY: _decay,
    RunCommand.EIGENFUNCTION: _eigenfunction,
}


def execute(config: RunConfig) -> Report:
    logger.info(f"Running {config.command.value}")
    return HANDLERS[config.command](config)
