# -*- coding: utf-8 -*-
"""
关系组件
清单中关系的分阶段查询、⊆_E 检查与有限划分的对照计算
"""

from typing import Any, Dict

from app.components.common import WorkbenchCell
from app.core.exception import ComponentError
from app.finite_oracle.partition import FinitePartition, finite_bireducible, finite_jump, finite_reducible
from app.jump.subset import subset_at_stage
from app.relations.presentation import describe
from app.relations.query import query


class Relations(WorkbenchCell):
    """关系组件"""

    def _cmd_query(self, args: Any = None) -> Dict[str, Any]:
        """m E n 在给定阶段的判定：{"relation", "m", "n", "stage"}"""
        args = self.args_of(args)
        name = self.text(args, "relation")
        E = self.manifest(args).relation(name)
        m, n = self.natural(args, "m"), self.natural(args, "n")
        stage = self.natural(args, "stage", self.settings.stage)
        verdict = query(E, m, n, stage)
        self.logger.info(f"[QUERY] {name}({m}, {n}) @ {stage}: {verdict.answer}/{verdict.certainty}")
        return {"relation": name, "m": m, "n": n, **verdict.to_dict()}

    def _cmd_subset(self, args: Any = None) -> Dict[str, Any]:
        """e ⊆_E e2 在给定阶段的判定：{"relation", "e", "e2", "stage"}"""
        args = self.args_of(args)
        name = self.text(args, "relation")
        E = self.manifest(args).relation(name)
        e, e2 = self.natural(args, "e"), self.natural(args, "e2")
        stage = self.natural(args, "stage", self.settings.stage)
        verdict = subset_at_stage(e, e2, E, stage)
        return {"relation": name, "e": e, "e2": e2, **verdict.to_dict()}

    def _cmd_list(self, args: Any = None) -> Dict[str, str]:
        """清单中的关系及其描述"""
        manifest = self.manifest(self.args_of(args))
        return {name: describe(E) for name, E in sorted(manifest.relations.items())}

    def _cmd_finite(self, args: Any = None) -> Dict[str, Any]:
        """有限划分的跳跃与可归约性：{"blocks", "other"}"""
        args = self.args_of(args)
        blocks = args.get("blocks")
        if not isinstance(blocks, list):
            raise ComponentError("argument 'blocks' must be a list", self.cell_name)
        P = FinitePartition.of(blocks)
        J = finite_jump(P)
        result: Dict[str, Any] = {"partition": P.to_dict(), "block_count": P.block_count,
                                  "jump_block_count": J.block_count}
        if isinstance(args.get("other"), list):
            Q = FinitePartition.of(args["other"])
            reduction = finite_reducible(P, Q)
            result["other"] = Q.to_dict()
            result["reducible"] = reduction.to_dict()
            result["bireducible"] = finite_bireducible(P, Q)
        return result
