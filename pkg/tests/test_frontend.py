"""Parser, renderer and dataflow analysis tests."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codecl.frontend import (
    AstFunction,
    Comment,
    ParseError,
    def_use,
    has_call,
    parse_function,
    render,
    swappable,
)


def first_stmt(source):
    return parse_function(source).body.statements[0]


class TestParse:
    def test_minimal_function(self):
        fn = parse_function("int f(int a){return a;}")
        assert fn.name == "f"
        assert len(fn.params) == 1
        assert len(fn.body.statements) == 1
        assert fn.body.statements[0].kind == "return"

    def test_statement_and_occurrence_counts(self):
        fn = parse_function("int f(){int a=1;int b=2;return a+b;}")
        assert len(fn.body.statements) == 3
        assert len(fn.occurrences["a"]) == 2
        assert len(fn.occurrences["b"]) == 2

    def test_unbalanced_input_is_rejected(self):
        with pytest.raises(ParseError):
            parse_function("int f({")

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as exc:
            parse_function("int f()\n{int a = ;}")
        assert exc.value.line == 2
        assert exc.value.col == 10

    def test_trailing_input_rejected(self):
        with pytest.raises(ParseError):
            parse_function("int f(){return 0;} int g(){return 1;}")

    def test_keyword_cannot_be_identifier(self):
        with pytest.raises(ParseError):
            parse_function("int if(){return 0;}")

    def test_operator_precedence(self):
        fn = parse_function("int f(int a,int b){return a+b*2;}")
        ret = fn.body.statements[0]
        assert ret.value.op == "+"
        assert ret.value.right.op == "*"

    def test_float_literal(self):
        fn = parse_function("float f(){return 0.50;}")
        assert fn.body.statements[0].value.text == "0.50"


class TestRender:
    def test_round_trip_is_structural_identity(self):
        fn = parse_function("int f(){return 0;}")
        assert parse_function(render(fn)) == fn

    def test_rename_reflected_in_text(self):
        from codecl.frontend import rename_identifiers

        fn = parse_function("int f(int a){return a;}")
        renamed = rename_identifiers(fn, var_map={"a": "v0"})
        text = render(renamed)
        assert "v0" in text
        assert "a" not in renamed.tokens

    def test_nested_if_braces_balanced(self):
        fn = parse_function(
            "int f(int a){if(a>0){if(a>1){return 2;}else{return 1;}}return 0;}")
        text = render(fn)
        assert text.count("{") == text.count("}")
        assert parse_function(text) == fn

    def test_minimal_parens_preserved(self):
        fn = parse_function("int f(int a,int b,int c){return (a+b)*c;}")
        again = parse_function(render(fn))
        assert again == fn

    def test_occurrence_count_matches_rendered_tokens(self):
        fn = parse_function(
            "int g(int x){int y=x*x;while(y>x){y=y-1;}return y;}")
        for name, occs in fn.occurrences.items():
            assert fn.tokens.count(name) == len(occs)
            for occ in occs:
                assert fn.tokens[occ.index] == name


class TestDefUse:
    def test_assignment(self):
        defs, uses = def_use(first_stmt("int f(int b){a=b+1;return a;}"))
        assert defs == {"a"}
        assert uses == {"b"}

    def test_declaration_with_init(self):
        defs, uses = def_use(first_stmt("int f(int a){int c=a*a;return c;}"))
        assert defs == {"c"}
        assert uses == {"a"}

    def test_return(self):
        defs, uses = def_use(first_stmt("int f(int x){return x;}"))
        assert defs == set()
        assert uses == {"x"}

    def test_compound_assignment_reads_target(self):
        defs, uses = def_use(first_stmt("int f(int b){a+=b;return a;}"))
        assert defs == {"a"}
        assert uses == {"a", "b"}

    def test_if_covers_subtree(self):
        stmt = first_stmt("int f(int a){if(a>0){b=a;}else{c=1;}return 0;}")
        defs, uses = def_use(stmt)
        assert defs == {"b", "c"}
        assert uses == {"a"}

    def test_call_arguments_are_uses(self):
        stmt = first_stmt("int f(int a){g(a,1);return 0;}")
        defs, uses = def_use(stmt)
        assert defs == set()
        assert uses == {"a"}
        assert has_call(stmt)


class TestSwappable:
    def test_independent_declarations(self):
        fn = parse_function("int f(){int a=1;int b=2;return a+b;}")
        s1, s2 = fn.body.statements[:2]
        assert swappable(s1, s2)

    def test_def_use_conflict(self):
        fn = parse_function("int f(){a=1;b=a;return b;}")
        s1, s2 = fn.body.statements[:2]
        assert not swappable(s1, s2)

    def test_calls_are_pinned(self):
        fn = parse_function("int f(){g();b=2;return b;}")
        s1, s2 = fn.body.statements[:2]
        assert not swappable(s1, s2)

    def test_def_def_conflict(self):
        fn = parse_function("int f(){a=1;a=2;return a;}")
        s1, s2 = fn.body.statements[:2]
        assert not swappable(s1, s2)

    def test_symmetry(self):
        sources = [
            "int f(){int a=1;int b=2;return 0;}",
            "int f(){a=1;b=a;return 0;}",
            "int f(){a=1;a=2;return 0;}",
            "int f(){int a=b;int c=b;return 0;}",
        ]
        for src in sources:
            s1, s2 = parse_function(src).body.statements[:2]
            assert swappable(s1, s2) == swappable(s2, s1)


class TestComment:
    def test_join_split_round_trip(self):
        c = Comment(("fast", "binary", "search"))
        assert Comment.from_text(c.text) == c

    @given(st.lists(st.text(alphabet=st.characters(whitelist_categories=("Ll",)),
                            min_size=1, max_size=8), min_size=0, max_size=10))
    def test_join_split_round_trip_property(self, words):
        c = Comment(tuple(words))
        assert Comment.from_text(c.text).words == tuple(words)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_round_trip_on_random_functions(data):
    """parse(render(parse(s))) == parse(s) on generator output."""
    from codecl.datagen import random_function_source

    seed = data.draw(st.integers(min_value=0, max_value=10_000))
    source = random_function_source(seed)
    fn = parse_function(source)
    assert parse_function(render(fn)) == fn
