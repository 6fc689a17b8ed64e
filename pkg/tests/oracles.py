# Exact expectations over every evolution history of small networks.
import copy
from collections import defaultdict
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from hdran.models.network import Network
from hdran.services.generator_service import GeneratorService


def enumerate_histories(k: int, n: int) -> List[Tuple[Fraction, Network]]:
    service = GeneratorService()
    frontier = [(Fraction(1), service.init_network(k))]
    for _ in range(n):
        following = []
        for probability, net in frontier:
            count = net.active_count
            for position in range(count):
                child = copy.deepcopy(net)
                service.subdivide(child, position)
                following.append((probability / count, child))
        frontier = following
    return frontier


def expectation(histories: List[Tuple[Fraction, Network]], measure: Callable[[Network], int]) -> Fraction:
    return sum((probability * measure(net) for probability, net in histories), Fraction(0))


def expected_newcomer_histogram(histories: List[Tuple[Fraction, Network]]) -> Dict[int, Fraction]:
    histogram: Dict[int, Fraction] = defaultdict(Fraction)
    for probability, net in histories:
        for vertex in range(net.index_k, net.vertex_count):
            histogram[len(net.adjacency[vertex])] += probability
    return dict(histogram)


def total_depth(net: Network) -> int:
    return int(net.active_depths().sum())


def label_degree_distribution(histories: List[Tuple[Fraction, Network]], label: int) -> Dict[int, Fraction]:
    distribution: Dict[int, Fraction] = defaultdict(Fraction)
    for probability, net in histories:
        degree = len(net.adjacency[net.index_k - 1 + label])
        distribution[degree - net.index_k] += probability
    return dict(distribution)
