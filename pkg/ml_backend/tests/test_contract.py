"""Wire-contract conformance for the reader service.

The gateway trusts nothing: every 200 response must satisfy
context[start:end] == answer with score in [0, 1]. The 25-pair suite
below covers short, long (multi-window), unicode, punctuation-heavy and
numeric contexts.
"""

import json
import socket
import threading
import time

import pytest

CASES = [
    ("what lowers risk",
     "Doctors often recommend lifestyle changes first. Many patients take "
     "aspirin to lower their risk."),
    ("what helps knee pain", "Ice helps with knee pain. Rest also matters."),
    ("who changed the bible",
     "Early church scribes corrected and changed the bible to fit their theology."),
    ("where did the cat sit", "The cat sat on the mat."),
    ("what is in orbit", "The moon stays in orbit. Stars shine far away."),
    ("what did doctors say", "Doctors say water and rest help recovery."),
    ("what about roses", "Roses grow best in slightly acidic soil."),
    ("question", "Answer. Another answer. A third answer with context."),
    ("what", "Short."),
    ("who", "A. B. C. D."),
    # unicode: offsets must be code-point indices
    ("where is the answer", "Ответ на вопрос здесь. The answer is here."),
    ("what did they say", "They said «très bien» and left."),
    ("what symbol", "The formula uses α and β throughout."),
    # punctuation and formatting
    ("what ratio", "The ratio was 3:1, i.e. 75% - a clear majority!"),
    ("what about dashes", "Dashes - like these - break up the text."),
    ("what list", "Items: one, two, three; also four."),
    ("what code", "Use answer(question, context) for the call."),
    # numbers and dates
    ("when", "It happened in 1999 and again in 2024."),
    ("how many", "There were 12228 articles in the largest corpus."),
    ("what year", "2020 2021 2022 2023"),
    # longer contexts (windowed under the tiny model's 48-token cap)
    ("what is the topic",
     " ".join(f"Sentence {i} talks about stars and the moon." for i in range(30))),
    ("what about water",
     " ".join(f"Paragraph {i} is about soil, water and roses." for i in range(25))),
    ("who did what",
     " ".join(f"Person {i} changed the records to fit their theology." for i in range(20))),
    # whitespace shapes
    ("what about spacing", "Multiple   spaces\tand\nnewlines appear here."),
    ("what is left", "   Leading and trailing whitespace survives.   "),
]


def test_contract_conformance_25_pairs(client, capsys):
    started = time.perf_counter()
    assert len(CASES) == 25
    failures = []
    for question, context in CASES:
        response = client.post("/answer", json={"question": question,
                                                "context": context})
        if response.status_code != 200:
            failures.append((question, response.status_code))
            continue
        payload = response.json()
        if set(payload) != {"answer", "start", "end", "score"}:
            failures.append((question, f"keys {sorted(payload)}"))
            continue
        start, end = payload["start"], payload["end"]
        if not (isinstance(start, int) and isinstance(end, int)
                and 0 <= start < end <= len(context)):
            failures.append((question, f"span [{start}, {end})"))
        elif context[start:end] != payload["answer"]:
            failures.append((question, "slice mismatch"))
        elif not 0.0 <= payload["score"] <= 1.0:
            failures.append((question, f"score {payload['score']}"))
    elapsed = time.perf_counter() - started

    ok = not failures and elapsed < 300.0
    with capsys.disabled():
        print(f"[acceptance] reader wire-contract conformance: "
              f"{'PASS' if ok else 'FAIL'}", flush=True)
    assert ok, f"failures={failures} elapsed={elapsed:.1f}s"


class TestValidation:
    def test_empty_question_422(self, client):
        response = client.post("/answer", json={"question": "", "context": "Text."})
        assert response.status_code == 422

    def test_whitespace_context_422(self, client):
        response = client.post("/answer", json={"question": "what", "context": "  \n "})
        assert response.status_code == 422

    def test_missing_fields_422(self, client):
        assert client.post("/answer", json={"question": "what"}).status_code == 422
        assert client.post("/answer", json={}).status_code == 422

    def test_inference_failure_500_with_detail(self, client):
        # zero-width spaces survive validation but tokenize to nothing
        response = client.post("/answer", json={"question": "what",
                                                "context": "​​"})
        assert response.status_code == 500
        assert "detail" in response.json()


class TestHealth:
    def test_reports_model_identity(self, client, tiny_model_dir):
        payload = client.get("/health").json()
        assert payload["status"] == "ok"
        assert payload["model"] == str(tiny_model_dir)


class TestHttpDeterminism:
    def test_identical_request_identical_bytes(self, client):
        body = {"question": "what lowers risk", "context": CASES[0][1]}
        assert (client.post("/answer", json=body).content
                == client.post("/answer", json=body).content)


class TestGatewayIntegration:
    """The primary gateway's remote backend accepts this server's answers."""

    def test_answer_remote_round_trip(self, reader):
        import uvicorn

        from katecheo.comprehension import BACKEND_REMOTE, BackendDescriptor, answer_remote
        from katecheo_reader import create_app

        with socket.socket() as probe:
            probe.bind(("127.0.0.1", 0))
            port = probe.getsockname()[1]

        config = uvicorn.Config(create_app(reader), host="127.0.0.1", port=port,
                                log_level="warning")
        server = uvicorn.Server(config)
        thread = threading.Thread(target=server.run, daemon=True)
        thread.start()
        try:
            deadline = time.time() + 15
            while not server.started:
                if time.time() > deadline:
                    pytest.fail("reader server did not start in time")
                time.sleep(0.05)

            backend = BackendDescriptor(mode=BACKEND_REMOTE,
                                        remote_url=f"http://127.0.0.1:{port}",
                                        timeout=10.0)
            context = CASES[0][1]
            answer = answer_remote("what lowers risk", context, backend)
            assert answer.backend == "remote"
            assert context[answer.start:answer.end] == answer.text
            assert 0.0 <= answer.score <= 1.0
        finally:
            server.should_exit = True
            thread.join(timeout=10)
