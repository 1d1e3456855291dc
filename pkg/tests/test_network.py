import io

import numpy as np
import pytest

from dualentropy import (Edge, NetworkTopology, PureState, e_t_example3_one_to_group,
                         example5_report, norm_factor, one_to_group,
                         one_to_group_dense, party_marginal_spectrum,
                         polygon_check, random_network, random_pure)


def bell():
    return PureState(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2))


def triangle_bells():
    return NetworkTopology(3, (Edge(0, 1, (bell(),)), Edge(0, 2, (bell(),)),
                               Edge(1, 2, (bell(),))))


def test_edge_validation():
    with pytest.raises(ValueError):
        Edge(1, 0, (bell(),))
    with pytest.raises(ValueError):
        Edge(0, 1, (random_pure((2, 2, 2), 0),))
    with pytest.raises(ValueError):
        NetworkTopology(2, (Edge(0, 2, (bell(),)),))


def test_party_marginal_spectrum_single_edge():
    net = NetworkTopology(2, (Edge(0, 1, (bell(),)),))
    lam = party_marginal_spectrum(net, 0)
    assert np.allclose(np.sort(lam), [0.5, 0.5])
    assert abs(one_to_group(net, 0) - 2.0) < 1e-12  # S^t of I/2


def test_two_bell_edges_product_spectrum():
    net = NetworkTopology(3, (Edge(0, 1, (bell(),)), Edge(0, 2, (bell(),))))
    lam = party_marginal_spectrum(net, 0)
    assert np.allclose(np.sort(lam), np.full(4, 0.25))
    # S^t of I/4 = r(4)
    assert abs(one_to_group(net, 0) - norm_factor(4)) < 1e-12
    assert abs(one_to_group(net, 0, normalized=True) - 1.0) < 1e-12


def test_isolated_party_contributes_nothing():
    net = NetworkTopology(3, (Edge(0, 1, (bell(),)),))
    assert one_to_group(net, 2) == 0.0
    assert net.party_dim(2) == 1


def test_triangle_of_bells_polygon():
    report = polygon_check(triangle_bells())
    assert np.allclose(report.values, [norm_factor(4)] * 3, atol=1e-12)
    assert np.allclose(report.taus, [-norm_factor(4)] * 3, atol=1e-12)
    with pytest.raises(ValueError):
        polygon_check(NetworkTopology(2, (Edge(0, 1, (bell(),)),)))


def global_dim(net):
    return int(np.prod([d for e in net.edges for s in e.states for d in s.dims]))


def test_fast_path_matches_dense():
    checked = 0
    for seed in range(20):
        net = random_network(4, 0.5, seed=seed)
        if not net.edges or global_dim(net) > 2 ** 10:
            continue
        for p in range(4):
            fast = one_to_group(net, p)
            dense = one_to_group_dense(net, p)
            assert abs(fast - dense) < 1e-8
        checked += 1
    assert checked >= 3


def test_edge_level_schmidt_symmetry():
    from dualentropy import schmidt_spectrum
    net = random_network(4, 0.9, dim_choices=(2, 3), seed=5)
    for e in net.edges:
        for s in e.states:
            la = np.sort(schmidt_spectrum(s, (0,)))[::-1]
            lb = np.sort(schmidt_spectrum(s, (1,)))[::-1]
            k = min(la.size, lb.size)
            assert np.allclose(la[:k], lb[:k], atol=1e-8)


def test_random_networks_satisfy_polygon():
    for seed in range(40):
        n = 3 + seed % 3
        net = random_network(n, 0.8, seed=seed)
        if len(net.edges) < 2:
            continue
        report = polygon_check(net)
        assert max(report.taus) <= 1e-9


def test_random_network_deterministic():
    a = random_network(5, 0.5, seed=42)
    b = random_network(5, 0.5, seed=42)
    assert len(a.edges) == len(b.edges)
    for ea, eb in zip(a.edges, b.edges):
        assert (ea.i, ea.j) == (eb.i, eb.j)
        assert np.allclose(ea.states[0].amplitudes, eb.states[0].amplitudes)
    assert not random_network(4, 0.0, seed=0).edges
    with pytest.raises(ValueError):
        random_network(1, 0.5)


def test_topology_serialization_round_trip():
    net = random_network(4, 0.7, seed=3)
    back = NetworkTopology.from_dict(net.to_dict())
    assert back.n_parties == net.n_parties
    for ea, eb in zip(net.edges, back.edges):
        assert (ea.i, ea.j) == (eb.i, eb.j)
        assert np.allclose(ea.states[0].amplitudes, eb.states[0].amplitudes)


def test_polygon_report_csv():
    report = polygon_check(triangle_bells())
    buf = io.StringIO()
    report.write_csv(buf)
    text = buf.getvalue()
    assert "party,one_to_group,tau" in text
    assert "# normalized: False" in text


def test_example5_report():
    res = example5_report()
    assert float(np.max(res.values)) <= 1e-9
    thetas = res.axes["theta"]
    mid = int(np.argmin(np.abs(thetas - np.pi / 4)))
    assert abs(res.axes["E_B"][mid] - 1.0) < 1e-10
    assert abs(res.axes["E_C"][mid] - 1.0) < 1e-10
    assert abs(res.axes["E_B"][0]) < 1e-12
    assert abs(res.values[0] - (res.axes["E_A"][0] - 1.0)) < 1e-12
    assert res.values[0] < 0
    # E_A agrees with the chain-state closed form at every grid point
    for th, ea in zip(thetas[::10], res.axes["E_A"][::10]):
        assert abs(ea - e_t_example3_one_to_group(np.cos(th), np.sin(th))) < 1e-12
