import logging
from pathlib import Path
from typing import Dict, List, Union
from augtree.core.instance import Instance
from augtree.core.oracle import L1Oracle, MatrixOracle
from augtree.core.tree import COST_LIMIT, Tree
from augtree.exceptions import (
    AugTreeError,
    CostFormatError,
    CostOverflowError,
    DoatParseError,
    EdgeCountError,
    HeaderError,
)
from augtree.schemas import LowerBoundParams, OracleKind, Variant


logger = logging.getLogger(__name__)

MAGIC = "DOAT 1"


# ========== 写出 ==========

def dumps_instance(instance: Instance) -> str:
    tree, oracle = instance.tree, instance.oracle
    lines = [MAGIC, f"n={tree.n} k={instance.k} oracle={oracle.kind.value}"]
    for u, v, c in tree.edges:
        lines.append(f"T {u} {v} {c}")

    if oracle.kind == OracleKind.EXPLICIT and isinstance(oracle, MatrixOracle):
        for row in oracle.payload().tolist():
            lines.append(" ".join(str(x) for x in row))
    elif oracle.kind == OracleKind.L1 and isinstance(oracle, L1Oracle):
        for x, y in oracle.payload():
            lines.append(f"{x} {y}")
    elif oracle.kind in (OracleKind.LB3, OracleKind.LBK) and hasattr(oracle, "params"):
        p: LowerBoundParams = oracle.params
        lines.append(f"params n_star={p.n_star} a={p.a} b={p.b} variant={p.variant.value}")
    else:
        raise AugTreeError(f"无法序列化的预言机类型: {type(oracle).__name__}")
    return "\n".join(lines) + "\n"


def save_instance(instance: Instance, path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_text(dumps_instance(instance), encoding="utf-8")
    logger.info(f"实例已保存: {path} (n={instance.n}, k={instance.k}, oracle={instance.oracle.kind.value})")


# ========== 读入 ==========

def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise CostFormatError(f"{what} 不是整数: {token!r}")


def _parse_kv(tokens: List[str], where: str) -> Dict[str, str]:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise HeaderError(f"{where} 中的记录不是 key=value: {tok!r}")
        key, value = tok.split("=", 1)
        out[key] = value
    return out


def loads_instance(text: str) -> Instance:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or " ".join(lines[0].split()) != MAGIC:
        raise HeaderError(f"缺少文件头 {MAGIC!r}")
    if len(lines) < 2:
        raise HeaderError("缺少参数行 n= k= oracle=")

    header = _parse_kv(lines[1].split(), "参数行")
    for key in ("n", "k", "oracle"):
        if key not in header:
            raise HeaderError(f"参数行缺少 {key}=")
    try:
        n = int(header["n"])
        k = int(header["k"])
    except ValueError:
        raise HeaderError(f"n/k 不是整数: n={header['n']!r} k={header['k']!r}")
    try:
        kind = OracleKind(header["oracle"])
    except ValueError:
        raise HeaderError(f"未知的 oracle 类型: {header['oracle']!r}")
    if n < 1:
        raise HeaderError(f"n 必须为正: {n}")

    body = lines[2:]
    tree_lines = [ln for ln in body if ln.split()[0] == "T"]
    rest = [ln for ln in body if ln.split()[0] != "T"]
    if len(tree_lines) != n - 1:
        raise EdgeCountError(f"edge count mismatch: 期望 {n - 1} 条树边，实际 {len(tree_lines)}")

    edges = []
    total = 0
    for ln in tree_lines:
        parts = ln.split()
        if len(parts) != 4:
            raise DoatParseError(f"树边行格式错误: {ln!r}")
        u = _parse_int(parts[1], "顶点编号")
        v = _parse_int(parts[2], "顶点编号")
        c = _parse_int(parts[3], "边代价")
        if c < 0:
            raise CostFormatError(f"边代价必须非负: {ln!r}")
        total += c
        if total >= COST_LIMIT:
            raise CostOverflowError(f"边代价总和超过 2^62: {total}")
        edges.append((u, v, c))
    tree = Tree(n, edges)

    if kind == OracleKind.EXPLICIT:
        if len(rest) != n:
            raise DoatParseError(f"显式矩阵需要 {n} 行，实际 {len(rest)}")
        matrix = []
        for ln in rest:
            row = [_parse_int(tok, "矩阵元素") for tok in ln.split()]
            if len(row) != n:
                raise CostFormatError(f"矩阵行长度应为 {n}: {ln!r}")
            if any(x >= COST_LIMIT for x in row):
                raise CostOverflowError(f"矩阵元素超过 2^62: {ln!r}")
            matrix.append(row)
        oracle = MatrixOracle(matrix)
        return Instance(tree, oracle, k)

    if kind == OracleKind.L1:
        if len(rest) != n:
            raise DoatParseError(f"L1 点集需要 {n} 行，实际 {len(rest)}")
        points = []
        for ln in rest:
            parts = ln.split()
            if len(parts) != 2:
                raise CostFormatError(f"点坐标行格式错误: {ln!r}")
            points.append((_parse_int(parts[0], "坐标"), _parse_int(parts[1], "坐标")))
        return Instance(tree, L1Oracle(points), k)

    # lb3 / lbk：按参数重建并核对树
    if len(rest) != 1 or rest[0].split()[0] != "params":
        raise DoatParseError("下界实例需要一行 params n_star= ...")
    params_kv = _parse_kv(rest[0].split()[1:], "params 行")
    if "n_star" not in params_kv:
        raise HeaderError("params 行缺少 n_star=")
    try:
        params = LowerBoundParams(
            n_star=int(params_kv["n_star"]),
            k=k,
            variant=Variant(params_kv.get("variant", Variant.IAB.value)),
            a=int(params_kv["a"]) if params_kv.get("a") not in (None, "None") else None,
            b=int(params_kv["b"]) if params_kv.get("b") not in (None, "None") else None,
        )
    except ValueError as e:
        raise HeaderError(f"params 行无法解析: {e}")

    from augtree.lowerbound.construction import gen_lb

    instance = gen_lb(params)
    if instance.oracle.kind != kind:
        raise HeaderError(f"oracle={kind.value} 与 k={k} 不一致")
    if instance.tree != tree:
        raise DoatParseError("树边与下界实例参数重建出的树不一致")
    return instance


def load_instance(path: Union[str, Path]) -> Instance:
    path = Path(path)
    instance = loads_instance(path.read_text(encoding="utf-8"))
    logger.info(f"实例已加载: {path} (n={instance.n}, k={instance.k}, oracle={instance.oracle.kind.value})")
    return instance
