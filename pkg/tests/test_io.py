import json

import pandas as pd
import pytest

from hamcomp.utils.errors import GraphParseError
from hamcomp.utils.graph_io import format_graph, parse_graph, read_graph, write_graph
from hamcomp.utils.reporting import ReportWriterFactory, summarize, write_document


class TestParseGraph:
    def test_triangle(self):
        G = parse_graph("3 3\n0 1\n0 2\n1 2\n")
        assert G.n == 3 and G.m == 3 and G.has_edge(1, 2)

    def test_blank_lines_are_skipped(self):
        assert parse_graph("\n2 1\n\n0 1\n\n").m == 1

    def test_edgeless(self):
        G = parse_graph("4 0\n")
        assert G.n == 4 and G.m == 0

    @pytest.mark.parametrize('text,line_number', [
        ("", 1),
        ("3\n", 1),
        ("3 1\n0 x\n", 2),
        ("3 1\n0 3\n", 2),
        ("3 1\n1 0\n", 2),
        ("3 1\n1 1\n", 2),
        ("3 2\n0 1\n0 1\n", 3),
        ("3 2\n0 1\n", 2),
        ("3 1\n0 1\n1 2\n", 3),
    ])
    def test_malformed_input_reports_the_line(self, text, line_number):
        with pytest.raises(GraphParseError) as error:
            parse_graph(text)
        assert error.value.line_number == line_number
        assert str(error.value).startswith(f"line {line_number}: ")
        assert error.value.exit_code == 2

    def test_file_round_trip(self, tmp_path, petersen):
        path = tmp_path / 'petersen.txt'
        write_graph(petersen, path)
        assert read_graph(path) == petersen
        assert path.read_text().splitlines()[0] == '10 15'

    def test_format_lists_edges_in_order(self):
        G = parse_graph("3 2\n1 2\n0 1\n")
        assert format_graph(G) == "3 2\n0 1\n1 2\n"


class TestReporting:
    records = [{'trial': 0, 'value': 0.5}, {'trial': 1, 'value': 0.25}]

    def test_csv(self):
        text = ReportWriterFactory.create_writer('csv', ['trial', 'value']).render(self.records)
        assert text == "trial,value\n0,0.5\n1,0.25\n"

    def test_json_lines(self):
        text = ReportWriterFactory.create_writer('json').render(self.records)
        assert [json.loads(line) for line in text.splitlines()] == self.records
        assert text.endswith('\n')

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            ReportWriterFactory.create_writer('xml')

    def test_columns_fix_the_order(self):
        text = ReportWriterFactory.create_writer('csv', ['value', 'trial', 'missing']).render(self.records)
        assert text.splitlines()[0] == 'value,trial,missing'

    def test_writer_to_path(self, tmp_path):
        path = tmp_path / 'out.csv'
        ReportWriterFactory.create_writer('csv').write(self.records, path=path)
        assert path.read_text() == "trial,value\n0,0.5\n1,0.25\n"

    def test_document_keys_are_sorted(self):
        assert write_document({'b': 1, 'a': [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'

    def test_summary_rows(self):
        rows = summarize(pd.DataFrame(self.records), ['value'])
        assert [row['record'] for row in rows] == ['mean', 'std', 'sem']
        assert rows[0]['value'] == pytest.approx(0.375)
        assert rows[2]['value'] == pytest.approx(rows[1]['value'] / 2 ** 0.5)

    def test_single_row_summary(self):
        rows = summarize(pd.DataFrame(self.records[:1]), ['value'])
        assert rows[1]['value'] == 0.0 and rows[2]['value'] == 0.0
