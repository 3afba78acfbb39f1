from django_filters.rest_framework import FilterSet, filters

from limit_harness.models import SweepPoint, SweepRun


class SweepPointFilter(FilterSet):
    run = filters.ModelChoiceFilter(queryset=SweepRun.objects.all())
    c_min = filters.NumberFilter(field_name='c', lookup_expr='gte')
    c_max = filters.NumberFilter(field_name='c', lookup_expr='lte')

    class Meta:
        model = SweepPoint
        fields = ('run', 'c_min', 'c_max')


class SweepRunFilter(FilterSet):
    p = filters.NumberFilter(field_name='p')
    status = filters.ChoiceFilter(choices=SweepRun.Status.choices)
    kind = filters.ChoiceFilter(choices=SweepRun.Kind.choices)

    class Meta:
        model = SweepRun
        fields = ('p', 'status', 'kind')
