"""The dual-blind quiz session, end to end over HTTP.

Runs the session service in-process and plays both partners through it:
create a session, fetch the form with each partner's own token, submit
answers, poll the report.  Neither token can ever read the other's
answers; the report only appears once both have submitted.

For a real deployment run ``dyadgames serve --storage DIR`` and point the
web client at it.
"""

import tempfile

from fastapi.testclient import TestClient

from dyadgames.service import SessionStore, create_app

with tempfile.TemporaryDirectory() as storage:
    client = TestClient(create_app(SessionStore(storage)))

    session = client.post("/sessions").json()
    sid = session["session_id"]
    token1, token2 = session["partner_tokens"]
    print(f"created session {sid}")
    print(f"partner links: {session['partner_links']}\n")

    form = client.get(f"/sessions/{sid}/form", params={"token": token1}).json()
    print(f"partner 1 sees {len(form['form']['questions'])} questions, first one:")
    print(f"  {form['form']['questions'][0]['prompt']}\n")

    early = client.get(f"/sessions/{sid}/report", params={"token": token1})
    print(f"report before anyone submits -> {early.status_code} {early.json()['status']}")

    answers1 = [[7, 2, 1]] * 10
    answers2 = [[6, 3, 1]] * 10
    r = client.post(f"/sessions/{sid}/answers", json={"token": token1, "answers": answers1})
    print(f"partner 1 submits -> state {r.json()['state']}")

    waiting = client.get(f"/sessions/{sid}/report", params={"token": token2})
    print(f"partner 2 polls the report -> {waiting.status_code} {waiting.json()['status']}")

    again = client.post(f"/sessions/{sid}/answers", json={"token": token1, "answers": answers1})
    print(f"partner 1 tries to resubmit -> {again.status_code} (rejected)")

    r = client.post(f"/sessions/{sid}/answers", json={"token": token2, "answers": answers2})
    print(f"partner 2 submits -> state {r.json()['state']}\n")

    report = client.get(f"/sessions/{sid}/report", params={"token": token2}).json()
    print(f"verdict: {report['verdict']}, K = {report['K']} of {report['K_max']}")
    print(f"balance point: {report['balance_point']}")
    print("raw answers are nowhere in the report; only the scores are shared.")
