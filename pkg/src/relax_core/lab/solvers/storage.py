"""Flat binary trajectory files: magic, JSON header, then float64 snapshots."""

import json
import struct
from functools import cached_property
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..spectral import Field, PeriodicGrid
from ..state import FluidState, Params, PhysicalConstants
from .trajectory import Trajectory

MAGIC = b"RLXTRAJ1"
_LENGTH = struct.Struct("<Q")
_AXES = ("x", "y")


class TrajectoryHeader(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["er", "fpme"]
    d: int
    n: int
    length: float
    times: list[float]
    fields: list[str]
    params: dict[str, Any]

    @property
    def grid(self) -> PeriodicGrid:
        return PeriodicGrid(d=self.d, n=self.n, length=self.length)


class StoredTrajectory(BaseModel):
    """A trajectory read back from disk, one array of shape ``(times, *grid.shape)`` per field."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    header: TrajectoryHeader
    arrays: dict[str, np.ndarray]

    @cached_property
    def grid(self) -> PeriodicGrid:
        return self.header.grid

    def density(self, index: int) -> Field:
        return Field(grid=self.grid, values=self.arrays["rho"][index])

    def momentum(self, index: int) -> Field:
        names = [f"m_{axis}" for axis in _AXES[: self.grid.d]]
        return Field(grid=self.grid, values=np.stack([self.arrays[name][index] for name in names]))

    def constants(self) -> PhysicalConstants:
        """Run parameters without computed entries such as the regime tag."""
        stored = {key: value for key, value in self.header.params.items() if key != "regime"}
        model = Params if "epsilon" in stored else PhysicalConstants
        return model.model_validate(stored)


def _field_names(traj: Trajectory) -> list[str]:
    names = ["rho"]
    if traj.kind == "er":
        names += [f"m_{axis}" for axis in _AXES[: traj.grid.d]]
    return names


def _snapshot_arrays(snapshot: Any) -> list[np.ndarray]:
    arrays = [snapshot.rho.values]
    if isinstance(snapshot, FluidState):
        arrays += list(snapshot.m.values)
    return arrays


def write_trajectory(traj: Trajectory, path: Path) -> None:
    grid = traj.grid
    header = TrajectoryHeader(
        kind=traj.kind,
        d=grid.d,
        n=grid.n,
        length=grid.length,
        times=traj.times,
        fields=_field_names(traj),
        params=traj.params.model_dump(mode="json"),
    )
    encoded = json.dumps(header.model_dump(mode="json"), sort_keys=True).encode()
    with Path(path).open("wb") as stream:
        stream.write(MAGIC)
        stream.write(_LENGTH.pack(len(encoded)))
        stream.write(encoded)
        for snapshot in traj.snapshots:
            for values in _snapshot_arrays(snapshot):
                stream.write(np.ascontiguousarray(values, dtype="<f8").tobytes())


def read_trajectory(path: Path) -> StoredTrajectory:
    raw = Path(path).read_bytes()
    if not raw.startswith(MAGIC):
        raise ValueError(f"{str(path)!r} is not a trajectory file")
    offset = len(MAGIC)
    (header_length,) = _LENGTH.unpack_from(raw, offset)
    offset += _LENGTH.size
    header = TrajectoryHeader.model_validate_json(raw[offset : offset + header_length])
    offset += header_length

    grid = header.grid
    data = np.frombuffer(raw, dtype="<f8", offset=offset)
    expected = len(header.times) * len(header.fields) * grid.size
    if data.size != expected:
        raise ValueError(f"{str(path)!r} holds {data.size} values, header implies {expected}")
    blocks = data.reshape(len(header.times), len(header.fields), *grid.shape)
    arrays = {name: blocks[:, i].copy() for i, name in enumerate(header.fields)}
    return StoredTrajectory(header=header, arrays=arrays)
