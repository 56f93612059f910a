import io
import json

import pandas as pd


class ReportWriterFactory:
    """Factory for result writers keyed by output format"""

    @staticmethod
    def create_writer(report_format, columns=None):
        if report_format == 'csv':
            return CSVReportWriter(columns)
        elif report_format == 'json':
            return JSONLinesReportWriter(columns)
        else:
            raise ValueError(f"Unsupported report format: {report_format}")


class ReportWriter:
    """Base class: records in, text out, one row per record"""

    extension = None

    def __init__(self, columns=None):
        self.columns = columns

    def frame(self, records):
        df = pd.DataFrame(list(records))
        if self.columns is not None:
            df = df.reindex(columns=self.columns)
        return df

    def render(self, records):
        raise NotImplementedError("Subclasses must implement render()")

    def write(self, records, path=None, stream=None):
        text = self.render(records)
        if path is not None:
            with open(path, 'w', encoding='utf-8', newline='') as handle:
                handle.write(text)
        elif stream is not None:
            stream.write(text)
        return text


class CSVReportWriter(ReportWriter):
    extension = 'csv'

    def render(self, records):
        buffer = io.StringIO()
        self.frame(records).to_csv(buffer, index=False, lineterminator='\n')
        return buffer.getvalue()


class JSONLinesReportWriter(ReportWriter):
    extension = 'json'

    def render(self, records):
        df = self.frame(records)
        if df.empty:
            return ''
        text = df.to_json(orient='records', lines=True, double_precision=15)
        return text if text.endswith('\n') else text + '\n'


def write_document(document, path=None, stream=None):
    """A single JSON document, keys sorted, for certificates and event files"""
    text = json.dumps(document, indent=2, sort_keys=True) + '\n'
    if path is not None:
        with open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(text)
    elif stream is not None:
        stream.write(text)
    return text


def summarize(df, columns):
    """mean / std / standard error rows for the given numeric columns"""
    count = len(df)
    rows = []
    for statistic in ('mean', 'std', 'sem'):
        row = {'record': statistic}
        for column in columns:
            values = df[column].astype(float)
            if statistic == 'mean':
                row[column] = values.mean()
            elif statistic == 'std':
                row[column] = values.std(ddof=1) if count > 1 else 0.0
            else:
                row[column] = values.sem(ddof=1) if count > 1 else 0.0
        rows.append(row)
    return rows
