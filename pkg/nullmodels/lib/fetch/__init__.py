from .edgelist import EdgeListFile, read_edge_list, read_graph, write_edge_list, write_sidecar, sidecar_path

__all__ = [
    'EdgeListFile',
    'read_edge_list',
    'read_graph',
    'write_edge_list',
    'write_sidecar',
    'sidecar_path',
]
