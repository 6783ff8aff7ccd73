from johansson import quotient, surface


def test_faces_and_euler(sphere, torus):
    assert len(surface.trace_faces(sphere).faces) == 8
    assert surface.euler_genus(sphere) == (2, 0)
    assert len(surface.trace_faces(torus).faces) == 3
    assert surface.euler_genus(torus) == (0, 1)


def test_face_partition(suite):
    for d in suite:
        fs = surface.trace_faces(d)
        assert sorted(x for f in fs.faces for x in f) == list(d.darts)


def test_checkerboard(sphere, torus):
    cb = surface.checkerboard(sphere)
    assert cb is not None
    fs = surface.trace_faces(sphere)
    # adjacent faces get opposite colors
    for x in sphere.darts:
        f, g = fs.face_of[x], fs.face_of[sphere.theta[x]]
        assert cb.coloring[f] != cb.coloring[g]
    cb2, witness = surface.checkerboard_with_witness(torus)
    assert cb2 is None and witness


def test_surface_homology(sphere, torus):
    h = surface.surface_homology(sphere)
    assert h.rank == 0
    h = surface.surface_homology(torus)
    assert h.rank == 2
    for c in torus.curves():
        cls = surface.curve_class(torus, c, ring="z")
        rev = surface.curve_class(
            torus, c, ring="z"
        )
        assert len(cls) == 2
        # the reversed orientation gives the negated class
        neg = h.express_darts([torus.theta[x] for x in reversed(c.darts)])
        assert neg == [-v for v in cls]


def test_quotient_cells(sphere):
    qc = quotient.build_quotient(sphere)
    assert (qc.nverts, qc.nedges, qc.nfaces) == (2, 6, 8)
    assert qc.euler == 4
    # face words are closed edge paths: boundary sums vanish
    for fword in qc.faces:
        assert fword


def test_filling_report(sphere, torus, q1_classes):
    fr = quotient.filling_report(sphere)
    assert (fr.q, fr.g, fr.r_required) == (2, 0, 4)
    fr = quotient.filling_report(torus)
    assert (fr.q, fr.g, fr.r_required) == (1, 1, 1)
    for d in q1_classes:
        fr = quotient.filling_report(d)
        assert fr.r_required == fr.q + 2 - 2 * fr.g
