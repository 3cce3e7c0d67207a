import pytest

from mackext.errors import EqualLines, UnsupportedPrime, ValidationError, ZeroVector
from mackext.group import (
    Line,
    all_planes,
    canonical_line,
    lines_by_position,
    lines_not_in_kernel,
    lines_of_plane,
    make_context,
    plane_span,
    position,
)


@pytest.mark.parametrize("p,r,n", [(3, 1, 1), (3, 2, 4), (5, 1, 1), (5, 2, 6), (3, 3, 13), (7, 2, 8)])
def test_line_count(p, r, n):
    ctx = make_context(p, r)
    assert ctx.num_lines == n
    assert len(ctx.lines) == n
    assert len(set(ctx.lines)) == n


def test_p_two_unsupported():
    with pytest.raises(UnsupportedPrime):
        make_context(2, 2)


@pytest.mark.parametrize("p", [4, 9, 1, 0])
def test_not_prime(p):
    with pytest.raises(ValidationError):
        make_context(p, 1)


def test_bad_rank():
    with pytest.raises(ValidationError):
        make_context(3, 0)


def test_canonical_line():
    assert canonical_line((2, 0), 3) == Line((1, 0))
    assert canonical_line((1, 2), 3) == Line((2, 1))
    with pytest.raises(ZeroVector):
        canonical_line((0, 0), 3)


def test_position():
    assert position(Line((1, 0))) == 1
    assert position(Line((2, 1))) == 2
    assert position(Line((0, 0, 1))) == 3


def test_lines_by_position():
    ctx = make_context(3, 2)
    assert lines_by_position(ctx, 2) == [Line((0, 1)), Line((1, 1)), Line((2, 1))]
    assert lines_by_position(ctx, 1) == [Line((1, 0))]
    assert len(lines_by_position(make_context(5, 3), 3)) == 25


def test_lines_not_in_kernel():
    ctx = make_context(3, 2)
    assert lines_not_in_kernel(ctx, ctx.phi(1)) == [Line((1, 0)), Line((1, 1)), Line((2, 1))]
    assert lines_not_in_kernel(ctx, ctx.homomorphism((0, 0))) == []
    got = lines_not_in_kernel(ctx, ctx.homomorphism((1, 1)))
    assert set(got) == {Line((1, 0)), Line((0, 1)), Line((1, 1))}


def test_planes():
    ctx = make_context(3, 2)
    q = plane_span(Line((1, 0)), Line((0, 1)), 3)
    assert len(lines_of_plane(q, 3)) == 4
    ctx3 = make_context(3, 3)
    q3 = plane_span(ctx3.line((1, 0, 0)), ctx3.line((0, 1, 0)), 3)
    assert lines_of_plane(q3, 3) == [
        Line((1, 0, 0)),
        Line((0, 1, 0)),
        Line((1, 1, 0)),
        Line((2, 1, 0)),
    ]
    with pytest.raises(EqualLines):
        plane_span(Line((1, 0)), ctx.line((2, 0)), 3)
    # (p^3-1)(p^3-p) / ((p^2-1)(p^2-p)) planes in F_3^3
    assert len(all_planes(ctx3)) == 13
    assert len(all_planes(ctx)) == 1


def test_every_line_in_its_position_class():
    ctx = make_context(5, 3)
    seen = []
    for i in range(1, 4):
        block = lines_by_position(ctx, i)
        assert len(block) == 5 ** (i - 1)
        assert all(x.position == i and x.rep[i - 1] == 1 for x in block)
        seen += block
    assert sorted(seen) == sorted(ctx.lines)
