import json
import os

from error import GraphFileError
from graph.drawing import from_straight_line_drawing
from graph.plane_graph import PlaneGraph, build_embedding


def graph_from_dict(data: dict) -> PlaneGraph:
    """Either a rotation system with an outer face, or a straight-line drawing
    given by coordinates and edges."""
    if not isinstance(data, dict):
        raise GraphFileError(f"graph data must be an object, got {type(data).__name__}")
    if "coords" in data:
        return _graph_from_drawing(data)
    try:
        rotation = data["rotation"]
        outer = data["outer"]
    except KeyError as e:
        raise GraphFileError(f"missing graph field {e}") from e
    if isinstance(rotation, dict):
        rotation = {int(v): nbrs for v, nbrs in rotation.items()}
    else:
        rotation = dict(enumerate(rotation))
    if "n" in data and data["n"] != len(rotation):
        raise GraphFileError(
            f"n = {data['n']} but {len(rotation)} rotation lists are given"
        )
    return build_embedding(rotation, [int(v) for v in outer])


def _graph_from_drawing(data: dict) -> PlaneGraph:
    try:
        coords = data["coords"]
        if isinstance(coords, dict):
            coords = {int(v): (float(x), float(y)) for v, (x, y) in coords.items()}
        else:
            coords = {v: (float(x), float(y)) for v, (x, y) in enumerate(coords)}
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFileError(f"malformed drawing: {e}") from e
    outer = data.get("outer")
    return from_straight_line_drawing(
        coords, edges, None if outer is None else [int(v) for v in outer]
    )


def load_graph(path: str) -> PlaneGraph:
    if not os.path.isfile(path):
        raise GraphFileError(f"no graph file {path}")
    with open(path, "rt", encoding="utf8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise GraphFileError(f"{path} is not valid JSON: {e}") from e
    return graph_from_dict(data)


def dump_graph(g: PlaneGraph, path: str) -> None:
    data = g.to_dict()
    if g.vertices == list(range(g.vertex_count)):
        data["rotation"] = [list(g.neighbors(v)) for v in g.vertices]
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    with open(path, "wt", encoding="utf8") as f:
        json.dump(data, f)


def list_graph_files(directory: str) -> list[str]:
    if not os.path.isdir(directory):
        return []
    return sorted(
        os.path.join(directory, name)
        for name in os.listdir(directory)
        if name.endswith(".json")
    )
