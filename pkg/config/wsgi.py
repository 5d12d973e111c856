"""
WSGI config for the active-testing project.

It serves the Django admin over the run records. It exposes a module-level
variable named ``application`` for Django's ``runserver`` and WSGI servers.
"""

import os

from django.core.wsgi import get_wsgi_application

# Default to local settings for development, can be overridden by DJANGO_SETTINGS_MODULE env var
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")

application = get_wsgi_application()
