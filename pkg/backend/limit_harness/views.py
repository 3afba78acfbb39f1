from django.db.models import Count
from django_filters.rest_framework import DjangoFilterBackend
from rest_framework import viewsets
from rest_framework.permissions import AllowAny

from limit_harness.filters import SweepPointFilter, SweepRunFilter
from limit_harness.models import SweepPoint, SweepRun
from limit_harness.pagination import LimitPagination
from limit_harness.serializers import (
    SweepPointSerializer,
    SweepRunDetailSerializer,
    SweepRunSerializer,
)


class SweepRunViewSet(viewsets.ReadOnlyModelViewSet):
    queryset = SweepRun.objects.annotate(
        points_count=Count('points')
    ).order_by('-created')
    permission_classes = [AllowAny]
    filter_backends = [DjangoFilterBackend]
    filterset_class = SweepRunFilter
    pagination_class = LimitPagination

    def get_queryset(self):
        queryset = super().get_queryset()
        if self.action == 'retrieve':
            return queryset.prefetch_related('points')
        return queryset

    def get_serializer_class(self):
        if self.action == 'retrieve':
            return SweepRunDetailSerializer
        return SweepRunSerializer


class SweepPointViewSet(viewsets.ReadOnlyModelViewSet):
    queryset = SweepPoint.objects.select_related('run').order_by('run', 'c')
    serializer_class = SweepPointSerializer
    permission_classes = [AllowAny]
    filter_backends = [DjangoFilterBackend]
    filterset_class = SweepPointFilter
    pagination_class = LimitPagination
