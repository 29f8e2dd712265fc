import json
from fractions import Fraction

from capax import capacities, contact, output, structure, toric
from conftest import random_downward_polytope

F = Fraction


def _json_cycle(payload):
    return json.loads(json.dumps(payload, sort_keys=True))


def test_capacity_report_round_trip(rng):
    for dom in (toric.ellipsoid(["7/2", 4]), random_downward_polytope(rng, 2)):
        rep = capacities.capacity_sequence(dom, 4, capacities.METHOD_LATTICE)
        payload = output.capacity_report_payload(rep)
        again = output.capacity_report_from_payload(_json_cycle(payload))
        assert again == rep
        assert output.capacity_report_payload(again) == payload


def test_contact_report_round_trip():
    E = toric.ellipsoid(["7/2", 4])
    rep = contact.contact_sequence(E, 5)
    payload = output.contact_report_payload(rep)
    again = output.contact_report_from_payload(_json_cycle(payload))
    assert again == rep


def test_structure_report_round_trip():
    E = toric.ellipsoid(["7/2", 4])
    for args in ((8, 11), (11, 3)):  # admissible and not
        rep = structure.structure_report(E, *args, eta_points=None)
        payload = output.structure_report_payload(rep)
        again = output.structure_report_from_payload(_json_cycle(payload))
        assert again == rep
    rep = structure.structure_report(E, 8, 11, eta_points=[["-2", "-2"]])
    again = output.structure_report_from_payload(
        _json_cycle(output.structure_report_payload(rep)))
    assert again == rep


def test_obstruction_and_squeezing_round_trip():
    rep = capacities.obstruct_embedding(toric.ball(1, 2), toric.ball("9/10", 2), 4)
    again = output.obstruction_report_from_payload(
        _json_cycle(output.obstruction_report_payload(rep)))
    assert again == rep

    sq = contact.ekp_squeezing_verdict("3/2", "5/2")
    again = output.squeezing_report_from_payload(
        _json_cycle(output.squeezing_report_payload(sq)))
    assert again == sq


def test_table_rendering_deterministic_and_decimal():
    E = toric.ellipsoid(["7/2", 4])
    rep = capacities.capacity_sequence(E, 3)
    table1 = output.render_capacity_report(rep, output.FORMAT_TABLE)
    table2 = output.render_capacity_report(rep, output.FORMAT_TABLE)
    assert table1 == table2
    assert "3.5" in table1 and "7/2" not in table1

    third = capacities.capacity_sequence(toric.ellipsoid([F(1, 3), 1]), 1)
    assert "1/3" in output.render_capacity_report(third, output.FORMAT_TABLE)


def test_csv_rendering():
    E = toric.ellipsoid(["7/2", 4])
    rep = contact.contact_sequence(E, 2)
    got = output.render_contact_report(rep, output.FORMAT_CSV)
    assert got == ("k,c_k,c_source,contact_c_k,spf\n"
                   "1,3.5,internal,5,5\n"
                   "2,4,internal,5,5\n")


def test_document_envelope():
    doc = output.make_document("caps", "json", output.digest_text("x"),
                               {"report": "capacities"})
    assert set(doc) == {"command", "version", "input_digest", "format", "payload"}
    assert doc["version"]
