# Copyright 2026 The erdc Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib

import pytest

import erdc

CORPUS = pathlib.Path(os.environ.get("ERDC_TEST_CORPUS", pathlib.Path(__file__).parents[2] / "tests" / "corpus"))


@pytest.fixture
def university():
    return (CORPUS / "university.erd").read_text()


def with_rows(snapshot, relation, rows):
    out = []
    for line in snapshot.splitlines():
        fields = line.split("\t")
        if fields[:2] == ["relation", relation]:
            fields[3] = str(len(rows) + 1)
            fields[4] = str(len(rows))
            out.append("\t".join(fields))
            out.extend(rows)
        else:
            out.append(line)
    return "\n".join(out) + "\n"


def test_version_and_backends():
    assert erdc.__version__ == "0.1.0"
    assert "cpp" in erdc.backends()


def test_check_valid_and_invalid(university):
    assert erdc.check(university) == []
    both = (CORPUS / "case_both_min.erd").read_text()
    [d] = erdc.check(both)
    assert (d.severity, d.code, d.declaration) == ("error", "UNSUPPORTED_BOTH_MIN_POSITIVE", "R")
    assert "UNSUPPORTED_BOTH_MIN_POSITIVE" in str(d)


def test_formats_round_trip(university):
    term = erdc.convert(university, "dsl", "term")
    xml = erdc.convert(university, "dsl", "xml")
    assert erdc.convert(xml, "xml", "term") == term
    assert erdc.convert(erdc.convert(term, "term", "dsl"), "dsl", "term") == term
    with pytest.raises(ValueError):
        erdc.convert(university, "yaml", "term")


def test_lower_and_manifest(university):
    lowered = erdc.lower(university)
    assert "Lecturer_taught_by_Key" in lowered
    manifest = erdc.manifest(university)
    assert "newLecture: new-operation (LecturerKey, Int, String, optional Int) -> Lecture" in manifest
    files = erdc.generate(university)
    assert any(path.endswith(".hpp") for path in files)
    assert 'CREATE TABLE "Lecture"' in erdc.ddl(university)


def test_verify(university):
    lowered = erdc.lower(university)
    empty = erdc.empty_snapshot(lowered)
    assert erdc.verify(lowered, empty) == []
    dangling = with_rows(empty, "Lecture", ["k:1\ti:1\ts:Logic\ti:4\tk:9"])
    [violation] = erdc.verify(lowered, dangling)
    assert "ForeignKeyExists" in violation
    with pytest.raises(erdc.CorruptStoreError):
        erdc.verify(lowered, "dbsnap/1\nrelation\tLecture\n")


def test_errors_carry_locations():
    with pytest.raises(erdc.ParseError) as info:
        erdc.lower("erd E { entity A { x: Int } }")
    assert (info.value.line, info.value.column) == (1, 27)
    assert isinstance(info.value, erdc.Error)
    with pytest.raises(erdc.XmlError):
        erdc.check("<erd name='X'></erdx>", format="xml")
    with pytest.raises(erdc.SchemaError) as schema:
        erdc.check("<erd/>", format="xml")
    assert (schema.value.element, schema.value.attribute) == ("erd", "name")
    with pytest.raises(erdc.UnsupportedRelationship) as unsupported:
        erdc.lower((CORPUS / "case_both_min.erd").read_text())
    assert unsupported.value.relationship == "R"


def test_xml_warnings_are_reported():
    [w] = erdc.check("<erd name='X' color='red'/>", format="xml")
    assert (w.severity, w.code, w.member) == ("warning", "UNKNOWN_XML_ATTRIBUTE", "color")
