from django.contrib import admin
from django.db.models import Count

from .models import SweepPoint, SweepRun


class SweepPointInline(admin.TabularInline):
    model = SweepPoint
    extra = 0
    fields = ('c', 'omega_c', 'gap', 'e_c', 'g_norm_s0', 'neg_l2',
              'orbit_dist', 'el_residual', 'outer_iters')
    readonly_fields = fields
    can_delete = False


@admin.register(SweepRun)
class SweepRunAdmin(admin.ModelAdmin):
    list_display = (
        'id',
        'kind',
        'p',
        'm',
        'tau',
        'n',
        'status',
        'points_count',
        'created',
    )
    list_filter = ('kind', 'status', 'p')
    search_fields = ('csv_path', 'json_path')
    readonly_fields = ('created', 'summary')
    inlines = (SweepPointInline,)
    list_per_page = 20

    def get_queryset(self, request):
        return super().get_queryset(request).annotate(
            points_count=Count('points')
        )

    @admin.display(description='Точек', ordering='points_count')
    def points_count(self, obj):
        return obj.points_count


@admin.register(SweepPoint)
class SweepPointAdmin(admin.ModelAdmin):
    list_display = ('run', 'c', 'omega_c', 'gap', 'e_c', 'orbit_dist')
    list_filter = ('run__p',)
    list_select_related = ('run',)
    list_per_page = 50
