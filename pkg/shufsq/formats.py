# shufsq/formats.py
from io import StringIO
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import networkx as nx
import orjson as json
from rich.console import Console
from rich.table import Table

from shufsq.models import ChordDiagram, CountTable, CoverSolution, SplitWitness, Word, WordDigraph
from shufsq.models.reports import letter_names

# --- Structured records: one JSON object per line ---


def dumps_record(record: Dict[str, Any]) -> str:
    return json.dumps(record, option=json.OPT_SORT_KEYS).decode()


def records_text(records: Iterable[Dict[str, Any]]) -> str:
    return "".join(dumps_record(record) + "\n" for record in records)


def witness_record(word: Word, witness: Optional[SplitWitness]) -> Dict[str, Any]:
    record: Dict[str, Any] = {"word": str(word), "found": witness is not None}
    if witness is not None:
        record.update(witness.to_record())
        record["u"] = str(witness.first(word))
        record["v"] = str(witness.second(word))
    return record


def count_table_records(table: CountTable) -> List[Dict[str, int]]:
    return [
        {"length": two_n, "ones": two_k, "count": count}
        for two_n in table.lengths
        for two_k, count in sorted(table.entries[two_n].items())
    ]


def cover_solution_text(solution: CoverSolution) -> str:
    """Sorted one-line permutations, one per line."""
    return "".join(gamma.one_line() + "\n" for gamma in solution.chosen)


# --- Graph exports ---


def to_networkx(structure: Union[WordDigraph, ChordDiagram]) -> nx.Graph:
    """D_W as a multidigraph, or a circle graph as a simple graph, with letters as node names."""
    if isinstance(structure, WordDigraph):
        names = letter_names(structure.word)
        graph = nx.MultiDiGraph(word=str(structure.word))
        graph.add_nodes_from(names[vertex] for vertex in structure.vertices)
        graph.add_edges_from((names[tail], names[head]) for tail, head in structure.arcs)
        return graph
    names = letter_names(structure.points)
    graph = nx.Graph(word=str(structure.points))
    graph.add_nodes_from(names[letter] for letter in sorted(set(structure.points.letters)))
    graph.add_edges_from((names[a], names[b]) for a, b in structure.edges())
    return graph


def to_gml(structure: Union[WordDigraph, ChordDiagram]) -> str:
    return "\n".join(nx.generate_gml(to_networkx(structure))) + "\n"


# --- Human-readable tables ---


def render_table(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Renders a rich table to plain text so it can go to stdout or a file alike."""
    table = Table(title=title)
    for column in columns:
        table.add_column(column, justify="right" if column[:1].isdigit() else "left")
    for row in rows:
        table.add_row(*(str(cell) for cell in row))
    buffer = StringIO()
    Console(file=buffer, width=160, color_system=None, force_terminal=False).print(table)
    return buffer.getvalue()


def count_table_human(table: CountTable) -> str:
    lengths = table.lengths
    rows = [[two_k] + [table.cell(two_n, two_k) for two_n in lengths] for two_k in table.row_weights()]
    rows.append(["total"] + [table.totals[two_n] for two_n in lengths])
    return render_table("|B(2n, 2k)|", ["2k \\ 2n"] + [str(two_n) for two_n in lengths], rows)
