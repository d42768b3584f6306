"""
ASGI config for the jtvo project.

The API is plain request/response, so the stock Django ASGI handler is enough.
"""
import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'jtvo.settings')

application = get_asgi_application()
