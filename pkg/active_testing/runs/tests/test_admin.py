from http import HTTPStatus

import pytest
from django.urls import reverse

from active_testing.runs.tests.factories import FalsificationRunFactory

pytestmark = pytest.mark.django_db


class TestFalsificationRunAdmin:
    def test_changelist(self, admin_client):
        FalsificationRunFactory.create_batch(3)
        url = reverse("admin:runs_falsificationrun_changelist")
        response = admin_client.get(url)
        assert response.status_code == HTTPStatus.OK

    def test_search(self, admin_client):
        url = reverse("admin:runs_falsificationrun_changelist")
        response = admin_client.get(url, data={"q": "sincos"})
        assert response.status_code == HTTPStatus.OK

    def test_view_run(self, admin_client):
        run = FalsificationRunFactory()
        url = reverse("admin:runs_falsificationrun_change", kwargs={"object_id": run.pk})
        response = admin_client.get(url)
        assert response.status_code == HTTPStatus.OK

    def test_export_page(self, admin_client):
        url = reverse("admin:runs_falsificationrun_export")
        response = admin_client.get(url)
        assert response.status_code == HTTPStatus.OK


class TestBenchSessionAdmin:
    def test_view_session_with_runs(self, admin_client):
        run = FalsificationRunFactory()
        url = reverse("admin:runs_benchsession_change", kwargs={"object_id": run.session.pk})
        response = admin_client.get(url)
        assert response.status_code == HTTPStatus.OK
