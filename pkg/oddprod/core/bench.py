"""
Benchmark Runner
Sweeps a parameter grid of random instances, colours and verifies each one, and
records RunStats rows; a size ladder of full products measures scaling
"""

import asyncio
import logging
import math
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from oddprod.api import generate_instance
from oddprod.config.variants import VARIANT_FACTOR, FactorKind, Variant
from oddprod.core.colouring import certified_bounds, colour
from oddprod.core.host import random_t_tree
from oddprod.core.product import SecondaryFactor, full_product
from oddprod.core.verification import verify_odd, verify_proper, verify_support_distinct
from oddprod.io.stats import RunMetadata, append_stats_rows, stats_row
from oddprod.utils.config import get_config
from oddprod.utils.errors import PaletteExhaustedError

logger = logging.getLogger(__name__)

LADDER_PATH_LENGTH = 100


class BenchConfig(BaseModel):
    """Parameter grid and run settings for ``oddprod bench``"""

    model_config = ConfigDict(extra="forbid")

    variants: List[Variant] = Field(default_factory=lambda: [Variant.THM1], min_length=1)
    t_values: List[int] = Field(default_factory=lambda: [1, 2], min_length=1)
    h_values: List[int] = Field(default_factory=lambda: [5, 10], min_length=1)
    ell_values: List[int] = Field(default_factory=lambda: [1, 2], min_length=1)
    delta_values: List[int] = Field(default_factory=lambda: [2, 3], min_length=1)
    r: int = Field(default=8, ge=1)
    q_vertex: float = Field(default=0.8, ge=0.0, le=1.0)
    p_edge: float = Field(default=0.8, ge=0.0, le=1.0)
    repetitions: int = Field(default=10, ge=1)
    seed_base: int = 0
    output: Optional[Path] = None
    ladder: List[int] = Field(default_factory=list)
    ladder_t: int = Field(default=3, ge=0)
    workers: Optional[int] = Field(default=None, ge=1)
    verify: bool = True


@dataclass(frozen=True)
class BenchTask:
    """One run of the grid"""

    variant: Variant
    t: int
    r: int
    h: int
    ell: int
    delta: int
    q_vertex: float
    p_edge: float
    seed: int
    verify: bool

    @property
    def cell(self) -> Tuple:
        return (self.variant.value, self.t, self.h, self.ell, self.delta)


@dataclass
class BenchResult:
    task: BenchTask
    row: List[str]
    colours_used: int
    palette: int
    failures: List[str] = field(default_factory=list)
    exhausted: bool = False


@dataclass
class LadderPoint:
    n: int
    seconds: float
    colours_used: int


@dataclass
class BenchReport:
    results: List[BenchResult] = field(default_factory=list)
    ladder: List[LadderPoint] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for r in self.results if r.failures)

    @property
    def exhausted(self) -> int:
        return sum(1 for r in self.results if r.exhausted)

    def cell_summary(self) -> Dict[Tuple, Tuple[int, int]]:
        """Cell -> (max colours_used observed, palette)"""
        summary: Dict[Tuple, Tuple[int, int]] = {}
        for result in self.results:
            used, palette = summary.get(result.task.cell, (0, result.palette))
            summary[result.task.cell] = (max(used, result.colours_used), palette)
        return summary

    def ladder_ratios(self) -> List[float]:
        """Time ratio between consecutive ladder rungs"""
        return [
            later.seconds / earlier.seconds if earlier.seconds > 0 else math.inf
            for earlier, later in zip(self.ladder, self.ladder[1:])
        ]

    def summary_lines(self) -> List[str]:
        lines = ["cell (variant,t,h,ell,delta): max colours_used / palette"]
        for cell, (used, palette) in sorted(self.cell_summary().items()):
            lines.append(f"  {cell}: {used} / {palette}")
        for point in self.ladder:
            lines.append(
                f"  ladder n={point.n}: {point.seconds:.3f}s, {point.colours_used} colours"
            )
        ratios = self.ladder_ratios()
        if ratios:
            lines.append("  ladder time ratios: " + ", ".join(f"{x:.1f}x" for x in ratios))
        lines.append(
            f"runs={len(self.results)} failures={self.failures} exhausted={self.exhausted}"
        )
        return lines


def build_tasks(config: BenchConfig) -> List[BenchTask]:
    """Expand the grid; clique sizes apply to path_clique variants, degrees to general ones"""
    tasks: List[BenchTask] = []
    for variant in config.variants:
        kind = VARIANT_FACTOR[variant]
        ells = config.ell_values if kind is FactorKind.PATH_CLIQUE else [1]
        deltas = config.delta_values if kind is FactorKind.GENERAL else [0]
        for t in config.t_values:
            for h in config.h_values:
                for ell in ells:
                    for delta in deltas:
                        for rep in range(config.repetitions):
                            tasks.append(
                                BenchTask(
                                    variant=variant,
                                    t=t,
                                    r=max(config.r, t + 1),
                                    h=h,
                                    ell=ell,
                                    delta=delta,
                                    q_vertex=config.q_vertex,
                                    p_edge=config.p_edge,
                                    seed=config.seed_base + rep,
                                    verify=config.verify,
                                )
                            )
    return tasks


def run_task(task: BenchTask) -> BenchResult:
    """Generate, colour and verify one instance (runs inside worker processes)"""
    kind = VARIANT_FACTOR[task.variant]
    graph = generate_instance(
        t=task.t,
        r=task.r,
        h=task.h,
        kind=kind,
        ell=task.ell,
        factor="random",
        max_degree=task.delta,
        q_vertex=task.q_vertex,
        p_edge=task.p_edge,
        seed=task.seed,
    )
    delta = graph.secondary.delta if kind is FactorKind.GENERAL else 0
    bounds = certified_bounds(graph, task.variant)
    palette = bounds.palette

    started = time.perf_counter()
    try:
        colouring, stats = colour(graph, variant=task.variant)
    except PaletteExhaustedError as e:
        logger.error(f"Palette exhausted on {task}: {e}")
        return BenchResult(task=task, row=[], colours_used=0, palette=palette, exhausted=True)
    millis = (time.perf_counter() - started) * 1000.0

    failures: List[str] = []
    if task.verify:
        if not verify_proper(graph, colouring).ok:
            failures.append("proper")
        if not verify_odd(graph, colouring)[0].ok:
            failures.append("odd")
        # blow-up colourings carry no support-distinctness guarantee
        if task.variant is not Variant.THM3_BLOWUP:
            if not verify_support_distinct(graph, colouring).ok:
                failures.append("support")
        if stats.colours_used > palette or stats.max_xy > bounds.max_xy:
            failures.append("palette")
        if stats.max_x > bounds.max_x or stats.max_y > bounds.max_y:
            failures.append("forbidden")

    meta = RunMetadata(
        variant=task.variant.value,
        t=task.t,
        h=graph.secondary.h,
        ell=task.ell,
        delta=delta,
        n=graph.n,
        m=graph.m,
        seed=task.seed,
        palette=palette,
        millis=millis,
    )
    return BenchResult(
        task=task,
        row=stats_row(stats, meta),
        colours_used=stats.colours_used,
        palette=palette,
        failures=failures,
    )


def run_ladder_point(t: int, n: int, seed: int) -> LadderPoint:
    """Time the path engine on a full product with about n vertices"""
    h = min(LADDER_PATH_LENGTH, n)
    r = max(t + 1, math.ceil(n / h))
    graph = full_product(random_t_tree(t, r, seed), SecondaryFactor.path(h))
    started = time.perf_counter()
    _, stats = colour(graph, variant=Variant.THM1)
    elapsed = time.perf_counter() - started
    return LadderPoint(n=graph.n, seconds=elapsed, colours_used=stats.colours_used)


class BenchRunner:
    """
    Runs a BenchConfig; grid tasks fan out over a process pool, CSV rows are
    written from the coordinating process only
    """

    def __init__(self, config: BenchConfig):
        self.config = config
        self.workers = config.workers or get_config().workers

    async def run(self) -> BenchReport:
        tasks = build_tasks(self.config)
        logger.info(f"Running {len(tasks)} bench tasks on {self.workers} worker(s)")

        if self.workers > 1 and len(tasks) > 1:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                futures = [loop.run_in_executor(pool, run_task, task) for task in tasks]
                results = list(await asyncio.gather(*futures))
        else:
            results = [run_task(task) for task in tasks]

        report = BenchReport(results=results)
        if self.config.output is not None:
            self._write_rows(report)

        for n in self.config.ladder:
            point = run_ladder_point(self.config.ladder_t, n, self.config.seed_base)
            logger.info(f"Ladder n={point.n}: {point.seconds:.3f}s")
            report.ladder.append(point)

        by_cell: Dict[Tuple, int] = defaultdict(int)
        for result in results:
            if result.failures:
                by_cell[result.task.cell] += 1
        for cell, count in sorted(by_cell.items()):
            logger.warning(f"Cell {cell}: {count} run(s) failed verification")
        return report

    def _write_rows(self, report: BenchReport) -> None:
        written = append_stats_rows(self.config.output, (r.row for r in report.results if r.row))
        logger.info(f"Appended {written} stats row(s) to {self.config.output}")
