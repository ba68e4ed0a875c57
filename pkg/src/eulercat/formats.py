"""Line-oriented text formats for categories, graphs, functors,
endofunctors and profunctors.

Category (``.fincat``)::

    name: L
    objects: a, b1, b2
    arrow f1: a -> b1
    arrow f2: a -> b2
    compose g . f = h

Identities are created as ``id_<x>`` unless an ``arrow`` line or an
``identity <x>: <id>`` line declares them; composites involving an
identity may be left out.  ``#`` starts a comment.

Anything that needs a category (functors, endofunctors, profunctors)
names it with ``domain:`` (or ``left:``/``right:``) followed by a file
path relative to the file, ``@catalog_name params``, or ``{`` with the
category lines on the following lines closed by ``}``.
"""

from __future__ import annotations

import os
import re
from typing import Callable

from .core import Arrow, DirectedGraph, FinCat, Functor, Profunctor, make_category, validate_profunctor
from .errors import InputError, ParseError
from .functors import SetFunctor, set_functor

_ARROW = re.compile(r"^arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_IDENT = re.compile(r"^identity\s+(\S+)\s*:\s*(\S+)$")
_COMPOSE = re.compile(r"^compose\s+(\S+)\s*\.\s*(\S+)\s*=\s*(\S+)$")
_EDGE = re.compile(r"^edge\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")


def _lines(text: str):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line


def _split_list(s: str) -> list[str]:
    return [x.strip() for x in s.split(",") if x.strip()]


# ---------------------------------------------------------------- category

def parse_category(text: str, source: str = "<input>") -> FinCat:
    return _parse_category_lines(list(_lines(text)), source)


def _parse_category_lines(lines, source: str) -> FinCat:
    name, objects = None, None
    arrows, idents, comp = [], {}, {}
    for n, line in lines:
        if line.startswith("name:"):
            name = line[5:].strip()
        elif line.startswith("objects:"):
            if objects is not None:
                raise ParseError("objects declared twice", source, n)
            objects = _split_list(line[8:])
        elif m := _ARROW.match(line):
            arrows.append(Arrow(*m.groups()))
        elif m := _IDENT.match(line):
            idents[m.group(1)] = m.group(2)
        elif m := _COMPOSE.match(line):
            g, f, h = m.groups()
            if (g, f) in comp and comp[(g, f)] != h:
                raise ParseError(f"composite {g} . {f} given twice", source, n)
            comp[(g, f)] = h
        else:
            raise ParseError(f"unrecognized line: {line!r}", source, n)
    if objects is None:
        raise ParseError("missing 'objects:' line", source, None)
    return make_category(name or os.path.splitext(os.path.basename(source))[0] or "C", objects, arrows, comp, idents)


def dump_category(C: FinCat) -> str:
    out = [f"name: {C.name}", "objects: " + ", ".join(C.objects)]
    out += [f"arrow {a.id}: {a.source} -> {a.target}" for a in C.arrows]
    out += [f"identity {x}: {C.identity(x)}" for x in C.objects if C.identity(x) != f"id_{x}"]
    for a in C.arrows:
        if C.is_identity(a.id):
            continue
        for g in C.out_arrows(a.target):
            if not C.is_identity(g):
                out.append(f"compose {g} . {a.id} = {C.compose(g, a.id)}")
    return "\n".join(out) + "\n"


# ------------------------------------------------------------------- graph

def parse_digraph(text: str, source: str = "<input>") -> DirectedGraph:
    vertices, edges = [], []
    for n, line in _lines(text):
        if line.startswith("vertex "):
            vertices += _split_list(line[7:])
        elif line.startswith("vertices:"):
            vertices += _split_list(line[9:])
        elif m := _EDGE.match(line):
            edges.append(m.groups())
        else:
            raise ParseError(f"unrecognized line: {line!r}", source, n)
    try:
        return DirectedGraph(tuple(vertices), tuple(edges))
    except InputError as e:
        raise ParseError(str(e), source, None) from e


def dump_digraph(G: DirectedGraph) -> str:
    out = [f"vertex {v}" for v in G.vertices] + [f"edge {e}: {s} -> {t}" for e, s, t in G.edges]
    return "\n".join(out) + "\n"


# ------------------------------------------------------ category references

def _resolve(ref: str, rest, source: str, n: int, base_dir: str, load: Callable[[str], str]):
    """Resolve a category reference; returns (category, remaining lines)."""
    ref = ref.strip()
    if ref == "{":
        block = []
        while rest:
            m, line = rest.pop(0)
            if line == "}":
                return _parse_category_lines(block, source), rest
            block.append((m, line))
        raise ParseError("unclosed '{' block", source, n)
    if ref.startswith("@"):
        from .builders import build

        parts = ref[1:].split()
        if not parts:
            raise ParseError("empty catalog reference", source, n)
        try:
            return build(parts[0], *[int(p) for p in parts[1:]]), rest
        except ValueError as e:
            raise ParseError(f"bad catalog parameters in {ref!r}", source, n) from e
    path = ref if os.path.isabs(ref) else os.path.join(base_dir, ref)
    try:
        text = load(path)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}", source, n) from e
    return parse_category(text, path), rest


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _inline(C: FinCat, key: str) -> list[str]:
    return [f"{key}: {{"] + ["  " + s for s in dump_category(C).splitlines()] + ["}"]


def _pairs(s: str, source: str, n: int) -> dict:
    out = {}
    for item in _split_list(s):
        if "->" not in item:
            raise ParseError(f"expected 'x -> y', got {item!r}", source, n)
        x, y = (t.strip() for t in item.split("->", 1))
        out[x] = y
    return out


def _header_and_body(text: str, keys: tuple, source: str, base_dir: str | None, load):
    lines = list(_lines(text))
    base_dir = base_dir if base_dir is not None else (os.path.dirname(source) if source not in ("-", "<input>") else ".")
    cats, body = {}, []
    while lines:
        n, line = lines.pop(0)
        key = line.split(":", 1)[0].strip()
        if key in keys and ":" in line:
            cats[key], lines = _resolve(line.split(":", 1)[1], lines, source, n, base_dir, load)
        else:
            body.append((n, line))
    for k in keys:
        if k not in cats:
            raise ParseError(f"missing '{k}:' line", source, None)
    return cats, body


# ----------------------------------------------------------- Set functors

def parse_set_functor(text: str, source: str = "<input>", base_dir: str | None = None,
                      load: Callable[[str], str] = _read) -> SetFunctor:
    cats, body = _header_and_body(text, ("domain",), source, base_dir, load)
    A = cats["domain"]
    sets, acts = {}, {}
    for n, line in body:
        head, _, tail = line.partition(":")
        words = head.split()
        if len(words) == 2 and words[0] == "at":
            sets[words[1]] = tuple(_split_list(tail))
        elif len(words) == 2 and words[0] == "on":
            acts[words[1]] = _pairs(tail, source, n)
        else:
            raise ParseError(f"unrecognized line: {line!r}", source, n)
    unknown = (set(sets) - set(A.objects)) | (set(acts) - set(A.arrow_ids))
    if unknown:
        raise ParseError(f"names not in the domain: {sorted(unknown)}", source, None)
    return set_functor(A, sets, acts)


def dump_set_functor(X: SetFunctor) -> str:
    A = X.domain
    out = _inline(A, "domain")
    out += [f"at {a}: " + ", ".join(X.at(a)) for a in A.objects]
    for f in A.arrows:
        if A.is_identity(f.id) or not X.at(f.source):
            continue
        out.append(f"on {f.id}: " + ", ".join(f"{x} -> {X.act(f.id, x)}" for x in X.at(f.source)))
    return "\n".join(line.rstrip() for line in out) + "\n"


# ------------------------------------------------------------ endofunctors

def parse_endofunctor(text: str, source: str = "<input>", base_dir: str | None = None,
                      load: Callable[[str], str] = _read) -> Functor:
    """``domain:`` plus ``obj a -> b`` and ``arr f -> g`` lines.  Arrow
    images may be omitted where the hom-set of the image has one element."""
    from .core import functor_from_object_map

    cats, body = _header_and_body(text, ("domain",), source, base_dir, load)
    C = cats["domain"]
    omap, amap = {}, {}
    for n, line in body:
        words = line.split()
        if len(words) == 4 and words[2] == "->" and words[0] in ("obj", "arr"):
            (omap if words[0] == "obj" else amap)[words[1]] = words[3]
        else:
            raise ParseError(f"unrecognized line: {line!r}", source, n)
    missing = [x for x in C.objects if x not in omap]
    if missing:
        raise ParseError(f"no image given for object {missing[0]}", source, None)
    return functor_from_object_map(C, C, omap, amap)


def dump_endofunctor(F: Functor) -> str:
    C = F.source
    out = _inline(C, "domain")
    out += [f"obj {x} -> {F.ob(x)}" for x in C.objects]
    out += [f"arr {f} -> {F.ar(f)}" for f in C.arrow_ids]
    return "\n".join(out) + "\n"


# -------------------------------------------------------------- profunctors

def parse_profunctor(text: str, source: str = "<input>", base_dir: str | None = None,
                     load: Callable[[str], str] = _read) -> Profunctor:
    """``left:`` (B) and ``right:`` (A) categories, then ``at b a: m, ...``,
    ``lact beta a: m -> m', ...`` and ``ract b alpha: m -> m', ...``."""
    cats, body = _header_and_body(text, ("left", "right"), source, base_dir, load)
    elements, left, right = {}, {}, {}
    for n, line in body:
        head, _, tail = line.partition(":")
        words = head.split()
        if len(words) == 3 and words[0] == "at":
            elements[(words[1], words[2])] = tuple(_split_list(tail))
        elif len(words) == 3 and words[0] == "lact":
            left[(words[1], words[2])] = _pairs(tail, source, n)
        elif len(words) == 3 and words[0] == "ract":
            right[(words[1], words[2])] = _pairs(tail, source, n)
        else:
            raise ParseError(f"unrecognized line: {line!r}", source, n)
    return validate_profunctor(Profunctor(cats["left"], cats["right"], elements, left, right))


def dump_profunctor(P: Profunctor) -> str:
    B, A = P.left_cat, P.right_cat
    out = _inline(B, "left") + _inline(A, "right")
    for b in B.objects:
        for a in A.objects:
            if P.M(b, a):
                out.append(f"at {b} {a}: " + ", ".join(P.M(b, a)))
    for (beta, a), tbl in sorted(P.left.items()):
        out.append(f"lact {beta} {a}: " + ", ".join(f"{x} -> {y}" for x, y in tbl.items()))
    for (b, alpha), tbl in sorted(P.right.items()):
        out.append(f"ract {b} {alpha}: " + ", ".join(f"{x} -> {y}" for x, y in tbl.items()))
    return "\n".join(out) + "\n"


# --------------------------------------------------------- poset map pairs

def parse_map_pair(text: str, source: str = "<input>") -> tuple[dict, dict]:
    """``F x -> y`` and ``G y -> x`` lines for a Galois-connection check."""
    F, G = {}, {}
    for n, line in _lines(text):
        words = line.split()
        if len(words) == 4 and words[0] in ("F", "G") and words[2] == "->":
            (F if words[0] == "F" else G)[words[1]] = words[3]
        else:
            raise ParseError(f"unrecognized line: {line!r}", source, n)
    return F, G
