##                  _       _
##  _ __ ___   __ _| |_ ___| |__   ___ _____   _____ _ __
## | '_ ` _ \ / _` | __/ __| '_ \ / __/ _ \ \ / / _ \ '__|
## | | | | | | (_| | || (__| | | | (_| (_) \ V /  __/ |
## |_| |_| |_|\__,_|\__\___|_| |_|\___\___/ \_/ \___|_|
##
## Matching covers, streaming and fully dynamic matching
## Copyright 2024 - 2026
##

"""
matchcover module

Collects the public entry points so that ``import matchcover`` is enough for
interactive use:

    >>> import matchcover
    >>> g = matchcover.read_edge_list('graph.txt')
    >>> report = matchcover.build_cover(g, matchcover.CoverParams(t=2, gamma=0.25))
    >>> matching, run = matchcover.run_stream('cascade', g, k=4, alpha=0.5)

"""

from ._version import get_versions
from .mcexceptions import MCException
from .mcgraph import Graph, VertexSet, double_cover
from .mcmatching import Matching, max_matching_general, max_matching_bipartite, greedy_stream_matching
from .mcregularity import regular_partition
from .mccover import CoverParams, build_cover, verify_matching_cover, verify_hitting_set, consolidate
from .mcstream import (SinglePassStream, BufferCascade, stream_match_cascade, stream_match_regularity,
                       stream_match_optguess, stream_match_greedy)
from .mcdynamic import DynamicConfig, DynamicEngine, DeamortizedEngine
from .mcharness import run_stream, replay_script
from .mcfiles import read_edge_list, write_edge_list, read_script, write_script

__all__ = ['MCException',
           'Graph', 'VertexSet', 'double_cover',
           'Matching', 'max_matching_general', 'max_matching_bipartite', 'greedy_stream_matching',
           'regular_partition',
           'CoverParams', 'build_cover', 'verify_matching_cover', 'verify_hitting_set', 'consolidate',
           'SinglePassStream', 'BufferCascade', 'stream_match_cascade', 'stream_match_regularity',
           'stream_match_optguess', 'stream_match_greedy',
           'DynamicConfig', 'DynamicEngine', 'DeamortizedEngine',
           'run_stream', 'replay_script',
           'read_edge_list', 'write_edge_list', 'read_script', 'write_script',
           'version', 'version_full', 'version_git_revision']


def version():
    """
    Prints the version and the revision matchcover was built from.

    Returns
    --------
    None
    """
    print(version_full())
    print(version_git_revision())


def version_full():
    """
    Returns
    --------
    str
        matchcover version
    """
    return get_versions()['version']


def version_git_revision():
    return get_versions()['full-revisionid']


if __name__ == "__main__":
    print(version_full())
