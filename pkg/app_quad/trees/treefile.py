"""
Скобочный формат деревьев.

Грамматика:
    tree  := node
    node  := '(' INT node* ')'
У корня INT — абсолютная метка, у остальных вершин — приращение
относительно родителя (−1, 0 или 1). Пример: (0 (-1) (0 (1))).
При чтении допускается юникодный минус «−».
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import List, TYPE_CHECKING, Union

from app_quad.errors import MalformedTree

if TYPE_CHECKING:
    from app_quad.trees.labeled_tree import LabeledTree

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([+\-]?\d+))")


def dumps_tree(tree: "LabeledTree") -> str:
    parts: List[str] = []
    labels = tree.labels
    stack = [(0, 0)]
    parts.append(f"({labels[0]}")
    while stack:
        v, i = stack[-1]
        ch = tree.children[v]
        if i < len(ch):
            stack[-1] = (v, i + 1)
            c = ch[i]
            parts.append(f" ({labels[c] - labels[v]}")
            stack.append((c, 0))
        else:
            parts.append(")")
            stack.pop()
    return "".join(parts)


def loads_tree(text: str) -> "LabeledTree":
    from app_quad.trees.labeled_tree import LabeledTree

    src = text.replace("−", "-").strip()
    children: List[List[int]] = []
    labels: List[int] = []
    stack: List[int] = []
    pos = 0
    expect_int = False
    done = False
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise MalformedTree(f"unexpected character at {pos}: {src[pos]!r}")
        pos = m.end()
        if done:
            raise MalformedTree("trailing data after the root node")
        if m.group(1):
            if expect_int:
                raise MalformedTree(f"missing label before '(' at {pos}")
            expect_int = True
        elif m.group(2):
            if expect_int or not stack:
                raise MalformedTree(f"unbalanced ')' at {pos}")
            stack.pop()
            done = not stack
        else:
            if not expect_int:
                raise MalformedTree(f"label outside a node at {pos}")
            value = int(m.group(3))
            v = len(labels)
            if stack:
                if value not in (-1, 0, 1):
                    raise MalformedTree(f"label delta {value} out of {{-1,0,1}}")
                parent = stack[-1]
                labels.append(labels[parent] + value)
                children[parent].append(v)
            else:
                if v:
                    raise MalformedTree("more than one root")
                labels.append(value)
            children.append([])
            stack.append(v)
            expect_int = False
    if not done:
        raise MalformedTree("unterminated tree")
    return LabeledTree.from_lists(children, labels, check=False)


def write_tree(path: Union[str, Path], tree: "LabeledTree") -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(dumps_tree(tree) + "\n", encoding="utf-8")
    return p


def read_tree(path: Union[str, Path]) -> "LabeledTree":
    return loads_tree(Path(path).read_text(encoding="utf-8"))
