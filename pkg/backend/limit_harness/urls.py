from django.urls import include, path
from rest_framework.routers import DefaultRouter

from .views import SweepPointViewSet, SweepRunViewSet

router = DefaultRouter()
router.register(r"runs", SweepRunViewSet, basename="run")
router.register(r"points", SweepPointViewSet, basename="point")

urlpatterns = [
    path("", include(router.urls)),
]
